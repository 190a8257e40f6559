"""Exact tangent maps of the group transformations and their commutators.

A :class:`TangentMap` is the 27x27 matrix of ``X -> d/dalpha R(alpha)(X)`` at
``alpha = 0``.  Entries are stored as an int64 numerator matrix over a single
positive denominator so that products stay exact and fast.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce

import numpy as np

from .jordan import DIM, JordanElement, freudenthal_det
from .scalars import Jet2
from .transforms import GeneratorName, build_generator


def _as_name(name) -> GeneratorName:
    return GeneratorName.parse(name) if isinstance(name, str) else name


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def integer_form(rows) -> tuple[np.ndarray, int]:
    """Scale a matrix of rationals to ``(int64 numerators, common denominator)``."""
    den = 1
    for row in rows:
        for v in row:
            den = _lcm(den, Fraction(v).denominator)
    num = np.array([[int(Fraction(v) * den) for v in row] for row in rows], dtype=np.int64)
    return num, den


@dataclass(frozen=True, eq=False)
class TangentMap:
    num: np.ndarray
    den: int = 1
    label: str = field(default="", compare=False)

    def __post_init__(self):
        num = np.asarray(self.num, dtype=np.int64)
        den = int(self.den)
        if den <= 0:
            raise ValueError("denominator must be positive")
        g = reduce(math.gcd, (int(v) for v in np.unique(np.abs(num))), den)
        if g > 1:
            num, den = num // g, den // g
        num.setflags(write=False)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def from_rationals(cls, rows, label: str = "") -> "TangentMap":
        num, den = integer_form(rows)
        return cls(num, den, label)

    @classmethod
    def zero(cls) -> "TangentMap":
        return cls(np.zeros((DIM, DIM), dtype=np.int64), 1, "0")

    @property
    def m(self) -> np.ndarray:
        """Entries as an object array of Fractions."""
        out = np.empty(self.num.shape, dtype=object)
        for idx, v in np.ndenumerate(self.num):
            out[idx] = Fraction(int(v), self.den)
        return out

    def __eq__(self, other):
        if not isinstance(other, TangentMap):
            return NotImplemented
        return self.den == other.den and np.array_equal(self.num, other.num)

    def __hash__(self):
        return hash((self.den, self.num.tobytes()))

    def _combine(self, other, sa: int, sb: int, label):
        den = _lcm(self.den, other.den)
        num = sa * self.num * (den // self.den) + sb * other.num * (den // other.den)
        return TangentMap(num, den, label)

    def __add__(self, other):
        return self._combine(other, 1, 1, f"({self.label}+{other.label})")

    def __sub__(self, other):
        return self._combine(other, 1, -1, f"({self.label}-{other.label})")

    def __neg__(self):
        return TangentMap(-self.num, self.den, f"-{self.label}")

    def __mul__(self, c):
        c = Fraction(c)
        return TangentMap(self.num * c.numerator, self.den * c.denominator, f"{c}*{self.label}")

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.num.any()

    def flat(self) -> np.ndarray:
        return self.num.reshape(-1)

    def apply(self, v) -> list[Fraction]:
        """Image of a Coord27 vector."""
        out = []
        for row in self.num:
            out.append(sum((Fraction(int(a)) * b for a, b in zip(row, v) if a), Fraction(0)) / self.den)
        return out

    def conjugated_by_permutation(self, perm) -> "TangentMap":
        """``P L P^-1`` for a coordinate permutation ``perm`` (new index -> old index)."""
        p = np.asarray(perm)
        return TangentMap(self.num[np.ix_(p, p)], self.den, self.label)


# --- extraction ------------------------------------------------------------------

@lru_cache(maxsize=None)
def jet_matrices(name) -> tuple[TangentMap, TangentMap]:
    """First and second derivative matrices of ``R(alpha)`` at ``alpha = 0``."""
    name = _as_name(name)
    action = build_generator(name)
    first, second = [], []
    alpha = Jet2.variable()
    for k in range(DIM):
        image = action(alpha, JordanElement.basis(k)).coordinates()
        first.append([_part(v, 1) for v in image])
        second.append([_part(v, 2) for v in image])
    f1 = TangentMap.from_rationals(list(map(list, zip(*first))), name.label)
    f2 = TangentMap.from_rationals(list(map(list, zip(*second))), f"d2 {name.label}")
    return f1, f2


def _part(v, order: int):
    if isinstance(v, Jet2):
        return (v.f0, v.f1, v.f2)[order]
    return v if order == 0 else 0


def tangent_of(name) -> TangentMap:
    """Column ``k`` is the first jet of ``R(alpha)`` applied to basis element ``E_k``."""
    return jet_matrices(_as_name(name))[0]


def matrix_commutator(a: TangentMap, b: TangentMap) -> TangentMap:
    num = a.num @ b.num - b.num @ a.num
    return TangentMap(num, a.den * b.den, f"[{a.label},{b.label}]")


def curve_commutator(name1, name2) -> TangentMap:
    """Half the second derivative of ``R1(a/2) o R2(a/2) o R1(-a/2) o R2(-a/2)``.

    Evaluated column by column on the 27 basis elements with jet-valued angles.
    """
    r1, r2 = build_generator(_as_name(name1)), build_generator(_as_name(name2))
    plus, minus = Jet2.variable(Fraction(1, 2)), Jet2.variable(Fraction(-1, 2))
    cols = []
    for k in range(DIM):
        X = JordanElement.basis(k)
        X = r2(minus, X)
        X = r1(minus, X)
        X = r2(plus, X)
        X = r1(plus, X)
        cols.append([_part(v, 2) / 2 for v in X.coordinates()])
    return TangentMap.from_rationals(list(map(list, zip(*cols))),
                                     f"curve[{name1},{name2}]")


def curve_first_jet(name1, name2) -> TangentMap:
    """First derivative of the commutator curve at zero (identically zero)."""
    r1, r2 = build_generator(_as_name(name1)), build_generator(_as_name(name2))
    plus, minus = Jet2.variable(Fraction(1, 2)), Jet2.variable(Fraction(-1, 2))
    cols = []
    for k in range(DIM):
        X = r1(plus, r2(plus, r1(minus, r2(minus, JordanElement.basis(k)))))
        cols.append([_part(v, 1) for v in X.coordinates()])
    return TangentMap.from_rationals(list(map(list, zip(*cols))))


class _MatJet:
    """Truncated power series ``A0 + A1 t + A2 t^2 / 2`` of integer matrices over ``den``."""

    def __init__(self, a0, a1, a2, den):
        self.a = (a0, a1, a2)
        self.den = den

    @classmethod
    def of(cls, name, c: Fraction):
        l1, l2 = jet_matrices(_as_name(name))
        den = _lcm(l1.den, l2.den) * c.denominator ** 2
        eye = np.eye(DIM, dtype=np.int64) * den
        a1 = l1.num * (den // l1.den) * c.numerator // c.denominator
        a2 = l2.num * (den // l2.den) * c.numerator ** 2 // c.denominator ** 2
        return cls(eye, a1, a2, den)

    def __matmul__(self, other):
        a0, a1, a2 = self.a
        b0, b1, b2 = other.a
        return _MatJet(a0 @ b0, a0 @ b1 + a1 @ b0, a0 @ b2 + 2 * (a1 @ b1) + a2 @ b0,
                       self.den * other.den)


def curve_commutator_composed(name1, name2) -> TangentMap:
    """Same quantity as :func:`curve_commutator`, composing per-generator 2-jet matrices.

    Each ``R(alpha)`` is linear on H3(O), so the 2-jet of the four-fold
    composition is the truncated product of the four matrix 2-jets.
    """
    half, mhalf = Fraction(1, 2), Fraction(-1, 2)
    prod = (_MatJet.of(name1, half) @ _MatJet.of(name2, half)
            @ _MatJet.of(name1, mhalf) @ _MatJet.of(name2, mhalf))
    if prod.a[1].any():
        raise ArithmeticError("commutator curve has a nonzero first derivative")
    return TangentMap(prod.a[2], 2 * prod.den, f"curve[{name1},{name2}]")


def is_one_parameter(name) -> bool:
    """``R(alpha)`` has second derivative ``L^2`` at zero, as a one-parameter subgroup does."""
    l1, l2 = jet_matrices(_as_name(name))
    return TangentMap(l1.num @ l1.num, l1.den * l1.den) == l2


def proportionality(a: TangentMap, b: TangentMap):
    """The rational ``k`` with ``a == k * b``, or ``None`` if there is none."""
    if b.is_zero():
        return Fraction(0) if a.is_zero() else None
    idx = np.flatnonzero(b.num)[0]
    k = Fraction(int(a.flat()[idx]) * b.den, int(b.flat()[idx]) * a.den)
    return k if a == b * k else None


# --- conservation laws -------------------------------------------------------------

def annihilates_trace(L: TangentMap) -> bool:
    return not L.num[:3].sum(axis=0).any()


def det_derivative(L: TangentMap, X: JordanElement):
    """``d/de det(X + e L X)`` at ``e = 0``, exactly."""
    v = X.coordinates()
    w = L.apply(v)
    jet = JordanElement.from_coordinates([Jet2(Fraction(a), b, 0) for a, b in zip(v, w)])
    return freudenthal_det(jet).f1
