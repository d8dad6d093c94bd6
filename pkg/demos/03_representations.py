"""
Two-dimensional representation theory
=====================================

Every irreducible representation of the algebra has dimension 1 or 2, and
all of them are parametrized by points of the complex unit sphere.  A point
z gives a 2x2 representation theta_z; whether it is irreducible depends
only on whether z is a scalar multiple of a real point.
"""

from fractions import Fraction
from random import Random

from halfsphere import (
    NCPoly,
    SpherePoint,
    character,
    classify_point,
    commutant_dimension,
    decompose_nonregular,
    is_irreducible,
    orbit_equivalent,
    phi_rep,
    pi,
    sample_regular_point,
    theta,
)
from halfsphere.parsing import format_mat2, format_point, format_value
from halfsphere.scalars import EC_I, ExactComplex

n = 2

# Three kinds of points, built exactly from rational data.
real_pt = SpherePoint.from_exact(
    [ExactComplex(Fraction(3, 5)), ExactComplex(Fraction(4, 5))]
)
torus_pt = real_pt.scale(EC_I)          # i times a real point
regular_pt = SpherePoint.from_exact(
    [ExactComplex(Fraction(3, 5)), ExactComplex(Fraction(0), Fraction(4, 5))]
)

for z in (real_pt, torus_pt, regular_pt):
    cls = classify_point(z)
    print(
        f"{format_point(z):24s} class={cls.tag:10s}"
        f" irreducible={is_irreducible(z)}"
        f" commutant_dim={commutant_dimension(z)}"
    )

# theta_z sends a generator v_k to an off-diagonal matrix built from the
# coordinate z_k.
x = pi(NCPoly.generator(n, 1))
print("\ntheta at the real point of v1:", format_mat2(theta(real_pt, x)))
print("theta at the regular point of v1:", format_mat2(theta(regular_pt, x)))

# It is a *-homomorphism: products and adjoints pass through.
y = pi(NCPoly.from_word(n, (1, 2)) - NCPoly.from_word(n, (2, 1)))
assert theta(regular_pt, x * y).eq(theta(regular_pt, x) * theta(regular_pt, y))
assert theta(regular_pt, x.star()).eq(theta(regular_pt, x).adjoint())
print("\n*-homomorphism checks pass")

# The character tr theta_z is constant along the orbit of z under the
# circle action and conjugation, so it only sees the orbit.
w = pi(NCPoly.from_word(n, (1, 1)) + NCPoly.from_word(n, (2, 1, 2)))
print("\ncharacter at z:        ", format_value(character(regular_pt, w)))
print("character at i z:      ", format_value(character(regular_pt.scale(EC_I), w)))
print("character at conj(z):  ", format_value(character(regular_pt.conjugate(), w)))
print(
    "orbit equivalent (z, iz):",
    orbit_equivalent(regular_pt, regular_pt.scale(EC_I)),
)

# At a non-regular point theta splits into two 1-dimensional pieces, the
# evaluations phi at a real point y and at -y.
yplus, yminus = decompose_nonregular(torus_pt)
print("\ntorus point splits through", format_point(yplus), "and", format_point(yminus))
eigs = theta(torus_pt, w).eigenvalues()
vals = {format_value(phi_rep(yplus, w)), format_value(phi_rep(yminus, w))}
print("eigenvalues:", [format_value(e) for e in eigs])
print("phi values: ", sorted(vals))

# Regular points in contrast have trivial commutant: a random sample stays
# irreducible.
rng = Random(11)
sample = [sample_regular_point(n, rng) for _ in range(3)]
print("\nrandom regular points all irreducible:", all(is_irreducible(z) for z in sample))
