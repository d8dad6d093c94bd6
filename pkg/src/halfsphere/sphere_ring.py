"""Polynomial functions on the complex unit sphere S^{n-1}_C.

Monomials carry separate exponent vectors for the coordinates z_i and their
conjugates (written z_i~ in output).  The circle weight of a monomial is
(number of z letters) - (number of z~ letters); products add weights, and
both the *-operation and the conjugation automorphism tau negate them.

Canonical forms are taken modulo the single sphere relation

    z_1 z_1~ + ... + z_n z_n~ = 1

oriented as z_1 z_1~ -> 1 - sum_{i>=2} z_i z_i~ under the degree-lex order
z_1 > z_1~ > z_2 > z_2~ > ...  One linear relation is trivially a Groebner
basis, so a polynomial is canonical exactly when no monomial contains both
z_1 and z_1~, and normal forms are unique.  Reduction is lazy: arithmetic
never reduces on its own, callers invoke reduce() where canonicality matters.
"""

from __future__ import annotations

from typing import Dict, Iterator, Sequence

from .errors import DimensionError
from .scalars import EC_ONE, EC_ZERO, ExactComplex, Fraction


class ZMonomial:
    """z^a z~^b with a, b nonnegative integer exponent tuples of length n."""

    __slots__ = ("a", "b", "_hash")

    def __init__(self, a: Sequence[int], b: Sequence[int]):
        self.a = tuple(a)
        self.b = tuple(b)
        if len(self.a) != len(self.b):
            raise DimensionError("exponent vectors must have equal length")
        self._hash = hash((self.a, self.b))

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def degree(self) -> int:
        return sum(self.a) + sum(self.b)

    @property
    def weight(self) -> int:
        return sum(self.a) - sum(self.b)

    def sort_key(self):
        # deglex with z_1 > z_1~ > z_2 > z_2~ > ...
        inter = []
        for x, y in zip(self.a, self.b):
            inter.append(x)
            inter.append(y)
        return (self.degree, tuple(inter))

    def __mul__(self, other: "ZMonomial") -> "ZMonomial":
        if len(self.a) != len(other.a):
            raise DimensionError("cannot multiply monomials of different dimension")
        return ZMonomial(
            tuple(x + y for x, y in zip(self.a, other.a)),
            tuple(x + y for x, y in zip(self.b, other.b)),
        )

    def swapped(self) -> "ZMonomial":
        """Exchange every z_i with z_i~ (the effect of tau on monomials)."""
        return ZMonomial(self.b, self.a)

    def has_redex(self) -> bool:
        return self.a[0] > 0 and self.b[0] > 0

    def strip_leading_pair(self) -> "ZMonomial":
        a = list(self.a)
        b = list(self.b)
        a[0] -= 1
        b[0] -= 1
        return ZMonomial(a, b)

    def raised_pair(self, i: int) -> "ZMonomial":
        """Multiply by z_{i+1} z_{i+1}~ (0-based index)."""
        a = list(self.a)
        b = list(self.b)
        a[i] += 1
        b[i] += 1
        return ZMonomial(a, b)

    def lowered_a(self, i: int) -> "ZMonomial":
        a = list(self.a)
        a[i] -= 1
        return ZMonomial(a, self.b)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ZMonomial) and self.a == other.a and self.b == other.b
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"ZMonomial({self.a}, {self.b})"


def _unit_monomial(n: int) -> ZMonomial:
    return ZMonomial((0,) * n, (0,) * n)


def _accumulate(d: Dict[ZMonomial, ExactComplex], m: ZMonomial, c: ExactComplex):
    cur = d.get(m)
    total = c if cur is None else cur + c
    if total.is_zero():
        d.pop(m, None)
    else:
        d[m] = total


class ZPoly:
    """A polynomial in z_1..z_n, z_1~..z_n~ with Gaussian-rational coefficients."""

    __slots__ = ("n", "terms", "_reduced", "_hash")

    def __init__(self, n: int, terms: Dict[ZMonomial, ExactComplex] | None = None):
        if n < 1:
            raise DimensionError("dimension n must be at least 1")
        self.n = n
        clean: Dict[ZMonomial, ExactComplex] = {}
        if terms:
            for m, c in terms.items():
                if m.n != n:
                    raise DimensionError("monomial dimension does not match n")
                if not c.is_zero():
                    clean[m] = c
        self.terms = clean
        self._reduced = not clean
        self._hash = None

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, n: int) -> "ZPoly":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "ZPoly":
        return cls.constant(n, EC_ONE)

    @classmethod
    def constant(cls, n: int, c: ExactComplex) -> "ZPoly":
        return cls(n, {_unit_monomial(n): c})

    @classmethod
    def generator(cls, n: int, i: int) -> "ZPoly":
        """z_i, 1-based."""
        if not 1 <= i <= n:
            raise DimensionError(f"generator index {i} out of range 1..{n}")
        a = [0] * n
        a[i - 1] = 1
        return cls(n, {ZMonomial(a, (0,) * n): EC_ONE})

    @classmethod
    def conj_generator(cls, n: int, i: int) -> "ZPoly":
        """z_i~, 1-based."""
        if not 1 <= i <= n:
            raise DimensionError(f"generator index {i} out of range 1..{n}")
        b = [0] * n
        b[i - 1] = 1
        return cls(n, {ZMonomial((0,) * n, b): EC_ONE})

    # ------------------------------------------------------------------
    # ring operations (lazy: no reduction here)

    def __add__(self, other: "ZPoly") -> "ZPoly":
        if self.n != other.n:
            raise DimensionError("dimension mismatch in addition")
        out = dict(self.terms)
        for m, c in other.terms.items():
            _accumulate(out, m, c)
        return ZPoly(self.n, out)

    def __sub__(self, other: "ZPoly") -> "ZPoly":
        return self + (-other)

    def __neg__(self) -> "ZPoly":
        return ZPoly(self.n, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, ZPoly):
            if self.n != other.n:
                raise DimensionError("dimension mismatch in multiplication")
            out: Dict[ZMonomial, ExactComplex] = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    _accumulate(out, m1 * m2, c1 * c2)
            return ZPoly(self.n, out)
        if isinstance(other, (ExactComplex, int, Fraction)):
            c = other if isinstance(other, ExactComplex) else ExactComplex.of(other)
            return ZPoly(self.n, {m: v * c for m, v in self.terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    # ------------------------------------------------------------------
    # involutions and grading

    def star(self) -> "ZPoly":
        """Pointwise complex conjugation: coefficients conjugated, z <-> z~."""
        out = ZPoly(self.n, {m.swapped(): c.conj() for m, c in self.terms.items()})
        out._reduced = self._reduced  # the redex condition is symmetric in a, b
        return out

    def tau(self) -> "ZPoly":
        """The conjugation automorphism z_i -> z_i~ with coefficients untouched."""
        out = ZPoly(self.n, {m.swapped(): c for m, c in self.terms.items()})
        out._reduced = self._reduced
        return out

    def weight_split(self) -> Dict[int, "ZPoly"]:
        parts: Dict[int, Dict[ZMonomial, ExactComplex]] = {}
        for m, c in self.terms.items():
            parts.setdefault(m.weight, {})[m] = c
        out = {}
        for w, terms in parts.items():
            p = ZPoly(self.n, terms)
            p._reduced = self._reduced
            out[w] = p
        return out

    def weight_part(self, w: int) -> "ZPoly":
        terms = {m: c for m, c in self.terms.items() if m.weight == w}
        p = ZPoly(self.n, terms)
        p._reduced = self._reduced
        return p

    def is_homogeneous_of_weight(self, w: int) -> bool:
        return all(m.weight == w for m in self.terms)

    # ------------------------------------------------------------------
    # canonical form

    def is_reduced(self) -> bool:
        return all(not m.has_redex() for m in self.terms)

    def reduce(self) -> "ZPoly":
        """Normal form modulo z_1 z_1~ -> 1 - sum_{i>=2} z_i z_i~.

        Unique by confluence of the single rule, so the worklist order below
        cannot affect the result.
        """
        if self._reduced:
            return self
        work = dict(self.terms)
        out: Dict[ZMonomial, ExactComplex] = {}
        while work:
            m, c = work.popitem()
            if c.is_zero():
                continue
            if m.has_redex():
                base = m.strip_leading_pair()
                _accumulate(work, base, c)
                for i in range(1, self.n):
                    _accumulate(work, base.raised_pair(i), -c)
            else:
                _accumulate(out, m, c)
        result = ZPoly(self.n, out)
        result._reduced = True
        return result

    # ------------------------------------------------------------------
    # evaluation

    def evaluate(self, coords: Sequence[ExactComplex]) -> ExactComplex:
        if len(coords) != self.n:
            raise DimensionError(
                f"point has {len(coords)} coordinates, polynomial expects {self.n}"
            )
        conj = [c.conj() for c in coords]
        total = EC_ZERO
        for m, coeff in self.terms.items():
            v = coeff
            for i, e in enumerate(m.a):
                if e:
                    v = v * coords[i] ** e
            for i, e in enumerate(m.b):
                if e:
                    v = v * conj[i] ** e
            total = total + v
        return total

    def evaluate_float(self, coords: Sequence[complex]) -> complex:
        if len(coords) != self.n:
            raise DimensionError(
                f"point has {len(coords)} coordinates, polynomial expects {self.n}"
            )
        conj = [complex(c).conjugate() for c in coords]
        total = 0j
        for m, coeff in self.terms.items():
            v = coeff.to_complex()
            for i, e in enumerate(m.a):
                if e:
                    v *= complex(coords[i]) ** e
            for i, e in enumerate(m.b):
                if e:
                    v *= conj[i] ** e
            total += v
        return total

    # ------------------------------------------------------------------
    # misc

    @property
    def degree(self) -> int:
        """Total degree; 0 for the zero polynomial."""
        return max((m.degree for m in self.terms), default=0)

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: t[0].sort_key(), reverse=True)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ZPoly) and self.n == other.n and self.terms == other.terms
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"ZPoly(n={self.n}, {len(self.terms)} terms)"


def sphere_relation(n: int) -> ZPoly:
    """sum_i z_i z_i~ - 1, the defining relation of the sphere."""
    terms: Dict[ZMonomial, ExactComplex] = {}
    for i in range(n):
        a = [0] * n
        b = [0] * n
        a[i] = 1
        b[i] = 1
        terms[ZMonomial(a, b)] = EC_ONE
    _accumulate(terms, _unit_monomial(n), -EC_ONE)
    return ZPoly(n, terms)


def compositions(total: int, parts: int) -> Iterator[tuple]:
    """All tuples of `parts` nonnegative ints summing to `total`."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def reduced_monomials(n: int, weight: int, max_degree: int) -> Iterator[ZMonomial]:
    """All canonical monomials of the given weight and degree <= max_degree."""
    start = abs(weight)
    for deg in range(start, max_degree + 1, 2):
        sa = (deg + weight) // 2
        sb = (deg - weight) // 2
        for a in compositions(sa, n):
            for b in compositions(sb, n):
                if a[0] > 0 and b[0] > 0:
                    continue
                yield ZMonomial(a, b)
