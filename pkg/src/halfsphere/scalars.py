"""Exact Gaussian-rational scalars and the floating tolerance policy.

All canonical computation in this package runs over Q(i): complex numbers
whose real and imaginary parts are arbitrary-precision rationals, so equality
of canonical forms is decidable with zero tolerance.  Floating point enters
only through approximate evaluation at user-supplied float points; such
comparisons go through approx_eq with a relative epsilon.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

Rational = Fraction

DEFAULT_EPSILON = 1e-9


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an int or Fraction, got {type(x).__name__}")


@dataclass(frozen=True)
class ExactComplex:
    """A Gaussian rational re + im*i."""

    re: Rational = Fraction(0)
    im: Rational = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", _as_fraction(self.re))
        object.__setattr__(self, "im", _as_fraction(self.im))

    @staticmethod
    def of(re, im=0) -> "ExactComplex":
        return ExactComplex(Fraction(re), Fraction(im))

    def conj(self) -> "ExactComplex":
        return ExactComplex(self.re, -self.im)

    def modulus_squared(self) -> Rational:
        return self.re * self.re + self.im * self.im

    def is_real(self) -> bool:
        return self.im == 0

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __add__(self, other: "ExactComplex") -> "ExactComplex":
        return ExactComplex(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "ExactComplex") -> "ExactComplex":
        return ExactComplex(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "ExactComplex":
        return ExactComplex(-self.re, -self.im)

    def __mul__(self, other):
        if isinstance(other, ExactComplex):
            return ExactComplex(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        if isinstance(other, (int, Fraction)):
            return ExactComplex(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return ExactComplex(self.re / other, self.im / other)
        if isinstance(other, ExactComplex):
            m = other.modulus_squared()
            if m == 0:
                raise ZeroDivisionError("division by zero ExactComplex")
            return (self * other.conj()) / m
        return NotImplemented

    def __pow__(self, exponent: int) -> "ExactComplex":
        if exponent < 0:
            raise ValueError("negative exponent on ExactComplex")
        result = EC_ONE
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def to_complex(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __str__(self) -> str:  # debugging aid; canonical printing lives in parsing
        return f"{self.re}{'+' if self.im >= 0 else '-'}{abs(self.im)}i"


EC_ZERO = ExactComplex()
EC_ONE = ExactComplex(Fraction(1))
EC_I = ExactComplex(Fraction(0), Fraction(1))


def exact_sqrt(value: Rational):
    """Square root of a nonnegative rational, or None when it is not rational.

    A reduced fraction is a square iff numerator and denominator both are.
    """
    if value < 0:
        return None
    num, den = value.numerator, value.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def approx_eq(a, b, eps: float = DEFAULT_EPSILON) -> bool:
    """Relative comparison |a-b| <= eps * max(1, |a|, |b|) for floats/complex."""
    return abs(a - b) <= eps * max(1.0, abs(a), abs(b))


def approx_zero(a, eps: float = DEFAULT_EPSILON) -> bool:
    return abs(a) <= eps
