"""
Words, relations, and canonical forms
=====================================

The algebra is generated by self-adjoint elements v_1, ..., v_n subject to
sum v_i^2 = 1 and the half-commutation law v_i v_j v_k = v_k v_j v_i.
Every element has a canonical form in a crossed-product model, which makes
the word problem decidable: two words are equal exactly when their
canonical forms coincide.
"""

from halfsphere import NCPoly, nc_lift, pi, sphere_relation
from halfsphere.parsing import format_crossed, format_ncpoly, format_zpoly

n = 3

# The defining relation sum v_i^2 - 1 maps to zero in the model.
rel = sum(
    (NCPoly.from_word(n, (i, i)) for i in range(1, n + 1)), -NCPoly.one(n)
)
print("word-level relation:", format_ncpoly(rel))
print("its canonical form:", format_crossed(pi(rel)))

# On the commutative side the same fact is a rewrite: the sphere polynomial
# sum z_i z_i~ - 1 reduces to zero in the coordinate ring.
print("z-model relation reduces to:", format_zpoly(sphere_relation(n).reduce()))

# Half-commutation: any word of odd length may be reversed.
left = NCPoly.from_word(n, (1, 2, 3))
right = NCPoly.from_word(n, (3, 2, 1))
print("v1 v2 v3 == v3 v2 v1:", pi(left) == pi(right))

# Even-length words do NOT commute in general.
a = NCPoly.from_word(n, (1, 2))
b = NCPoly.from_word(n, (2, 1))
print("v1 v2 == v2 v1:", pi(a) == pi(b))

# A canonical form lives in two components: an even part (a polynomial in
# z_i, z_i~ of balanced degree) and an odd part.  Squares of generators
# eliminate z_1 z_1~ through the sphere relation.
x = pi(NCPoly.from_word(n, (1, 1)))
print("\npi(v1^2) even part:", format_zpoly(x.f0))
print("pi(v1^2) odd part: ", format_zpoly(x.f1))

# nc_lift is a section of pi: it produces a word-level representative
# whose canonical form is the one we started from.
y = pi(
    NCPoly.from_word(n, (2, 1, 1))
    - NCPoly.from_word(n, (1, 2, 3))
    + NCPoly.from_word(n, (1, 2))
)
lifted = nc_lift(y)
print("\na lift:", format_ncpoly(lifted))
print("lift reproduces the canonical form:", pi(lifted) == y)

# Every element splits into even and odd grade.
even, odd = y.grade()
print("\neven part:", format_zpoly(even.f0))
print("odd part: ", format_zpoly(odd.f1))

# The sign automorphism nu negates the generators; it acts as the grading
# involution.
print("nu fixes the even part:", even.nu() == even)
print("nu negates the odd part:", odd.nu() == -odd)

# gamma is conjugation transport: gamma(x) = sum_i v_i x v_i.  On even
# elements it intertwines left and right multiplication by generators:
# v_i x = gamma(x) v_i.
g1 = pi(NCPoly.generator(n, 1))
print("\nintertwining v1 x = gamma(x) v1:", g1 * even == even.gamma() * g1)
