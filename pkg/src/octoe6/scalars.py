"""Exact rationals and second-order jets.

A :class:`Jet2` is the truncated Taylor expansion ``(f(0), f'(0), f''(0))`` of a
function of the group parameter.  Feeding ``Jet2.variable()`` through the group
transformations yields exact tangent maps (first component) and the
second-derivative data needed by the commutator curves.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational as _RationalABC

Rational = Fraction

ELEMENTARY = ("cos", "sin", "cosh", "sinh", "exp")

# (f(0), f'(0), f''(0)) for each elementary function
_DERIVS_AT_ZERO = {
    "cos": (1, 0, -1),
    "sin": (0, 1, 0),
    "cosh": (1, 0, 1),
    "sinh": (0, 1, 0),
    "exp": (1, 1, 1),
}


def rational(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("refusing to convert a float to an exact rational")
    return Fraction(x)


def format_rational(x) -> str:
    x = rational(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s.strip())


class Jet2:
    """Second-order jet ``(f0, f1, f2)`` with truncated Leibniz multiplication."""

    __slots__ = ("f0", "f1", "f2")

    def __init__(self, f0=0, f1=0, f2=0):
        self.f0 = f0
        self.f1 = f1
        self.f2 = f2

    @classmethod
    def variable(cls, scale=1) -> "Jet2":
        """The jet of ``alpha -> scale * alpha`` at zero."""
        return cls(0, rational(scale), 0)

    @classmethod
    def constant(cls, c) -> "Jet2":
        return cls(c, 0, 0)

    def __iter__(self):
        return iter((self.f0, self.f1, self.f2))

    def __eq__(self, other):
        if isinstance(other, Jet2):
            return (self.f0, self.f1, self.f2) == (other.f0, other.f1, other.f2)
        if isinstance(other, (int, Fraction)):
            return self.f0 == other and self.f1 == 0 and self.f2 == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.f0, self.f1, self.f2))

    def __bool__(self):
        return bool(self.f0) or bool(self.f1) or bool(self.f2)

    def __repr__(self):
        return f"Jet2({self.f0}, {self.f1}, {self.f2})"

    def __neg__(self):
        return Jet2(-self.f0, -self.f1, -self.f2)

    def __pos__(self):
        return self

    def __add__(self, other):
        if isinstance(other, Jet2):
            return Jet2(self.f0 + other.f0, self.f1 + other.f1, self.f2 + other.f2)
        if isinstance(other, _RationalABC):
            return Jet2(self.f0 + other, self.f1, self.f2)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Jet2):
            return Jet2(self.f0 - other.f0, self.f1 - other.f1, self.f2 - other.f2)
        if isinstance(other, _RationalABC):
            return Jet2(self.f0 - other, self.f1, self.f2)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, _RationalABC):
            return Jet2(other - self.f0, -self.f1, -self.f2)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Jet2):
            a0, a1, a2 = self.f0, self.f1, self.f2
            b0, b1, b2 = other.f0, other.f1, other.f2
            return Jet2(a0 * b0, a0 * b1 + a1 * b0, a0 * b2 + 2 * a1 * b1 + a2 * b0)
        if isinstance(other, _RationalABC):
            return Jet2(self.f0 * other, self.f1 * other, self.f2 * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, _RationalABC):
            other = rational(other)
            return Jet2(self.f0 / other, self.f1 / other, self.f2 / other)
        return NotImplemented

    def compose(self, kind: str) -> "Jet2":
        """Jet of ``f(g(alpha))`` for an elementary ``f``; requires ``g(0) == 0``."""
        if self.f0 != 0:
            raise ValueError("elementary functions of a jet need a zero base point")
        d0, d1, d2 = _DERIVS_AT_ZERO[kind]
        g1, g2 = self.f1, self.f2
        return Jet2(Fraction(d0), d1 * g1, d2 * g1 * g1 + d1 * g2)


# Aliases for the spec'd operation names.
def jet_add(a: Jet2, b: Jet2) -> Jet2:
    return a + b


def jet_mul(a: Jet2, b: Jet2) -> Jet2:
    return a * b


def jet_neg(a: Jet2) -> Jet2:
    return -a


def jet_scale(a: Jet2, c) -> Jet2:
    return a * rational(c)


def jet_elementary(kind: str, c) -> Jet2:
    """2-jet at zero of ``alpha -> f(c * alpha)``."""
    if kind not in _DERIVS_AT_ZERO:
        raise ValueError(f"unknown elementary function {kind!r}")
    return Jet2.variable(c).compose(kind)


def _elementary(kind: str, x):
    if isinstance(x, Jet2):
        return x.compose(kind)
    if isinstance(x, _RationalABC) and x == 0:
        return Fraction(_DERIVS_AT_ZERO[kind][0])
    return getattr(math, kind)(x)


def cos(x):
    return _elementary("cos", x)


def sin(x):
    return _elementary("sin", x)


def cosh(x):
    return _elementary("cosh", x)


def sinh(x):
    return _elementary("sinh", x)


def exp(x):
    return _elementary("exp", x)
