"""
The projective-space correspondence
===================================

The even part of the sphere algebra is commutative and is generated by the
products v_i v_j.  Sending the matrix-unit symbol p_ij to v_i v_j defines
an isomorphism with the coordinate ring of complex projective space, where
the p_ij are the entries of a rank-one projector p = (z_i z_j~).
"""

from halfsphere import (
    IdealSpec,
    NCPoly,
    PExpr,
    check_projector_relations,
    ideal_span,
    phi_inv,
    pi,
    transport_ideal,
)
from halfsphere.parsing import format_ncpoly, format_zpoly

n = 3

# The symbols p_ij satisfy projector relations in the model:
# p* = p, p^2 = p, tr(p) = 1.
report = check_projector_relations(n)
print("p = p*: ", report.adjoint_ok)
print("p = p^2:", report.idempotent_ok)
print("tr(p)=1:", report.trace_ok)

# The correspondence itself: a p-monomial becomes an even word.
p12, p23 = PExpr.generator(n, 1, 2), PExpr.generator(n, 2, 3)
e = p12 * p23
print("\nphi(p12 p23) =", format_ncpoly(e.phi()))

# phi agrees with the projector model: the canonical form of phi(e) has
# even part equal to the evaluation of the p-symbols at p_ij = z_i z_j~.
print("model agreement:", pi(e.phi()).f0 == e.to_model())

# phi_inv recovers the projective function from an even canonical form.
back = phi_inv(pi(e.phi()))
print("phi_inv(phi(p12 p23)) =", format_zpoly(back))

# The involution transports as well: star on the p side matches the
# adjoint of the even word.
print("star transports:", pi(e.star().phi()) == pi(e.phi()).star())

# Relations on the projective side become even ideals on the sphere side.
# Symmetry of the projector (p12 = p21) corresponds to the commutator
# ideal, which cuts out the classical sphere.
m = 2
sym = PExpr.generator(m, 1, 2) - PExpr.generator(m, 2, 1)
gens = transport_ideal([sym])
print("\ntransported generator:", format_ncpoly(gens[0]))

commutators = tuple(
    NCPoly.from_word(m, (i, j)) - NCPoly.from_word(m, (j, i))
    for i in range(1, m + 1)
    for j in range(i + 1, m + 1)
)
span = ideal_span(IdealSpec(m, tuple(gens), 4))
comm = ideal_span(IdealSpec(m, commutators, 4))
print("span dimension at degree 4:", span.dimension)
print("matches the commutator ideal:", span == comm)
