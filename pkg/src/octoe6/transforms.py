"""One-parameter group transformations of H3(O).

Every transformation is evaluated generically over its scalar ring: floats
give finite-angle group checks, :class:`~octoe6.scalars.Jet2` parameters give
exact derivatives at the identity.  Type-1 actions conjugate by a 3x3 matrix
``diag(M, 1)``; types 2 and 3 are obtained by conjugating the whole action
with the cyclic type permutation.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import scalars
from .jordan import JordanElement, shift
from .octonion import (IMAGINARY, QUATERNIONIC_PAIRS, UNIT_INDEX, UNIT_NAMES,
                       Octonion, oct_conj, oct_mul)

BOOSTS = ("Btz", "Btx", "Btq")
SIMPLE_ROTATIONS = ("Rxz", "Rxq", "Rzq")
COMPOSITES = ("A", "G", "S")
KINDS = BOOSTS + SIMPLE_ROTATIONS + ("T",) + COMPOSITES
_WITH_UNIT = {"Btq", "Rxq", "Rzq", "A", "G", "S"}


class AssociationMismatch(ArithmeticError):
    """The two parenthesizations of ``M X M^dagger`` disagree."""


@dataclass(frozen=True, order=True)
class GeneratorName:
    kind: str
    units: tuple = ()
    type_index: int = 1

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.type_index not in (1, 2, 3):
            raise ValueError("type index must be 1, 2 or 3")
        want = 2 if self.kind == "T" else (1 if self.kind in _WITH_UNIT else 0)
        if len(self.units) != want:
            raise ValueError(f"{self.kind} takes {want} imaginary unit(s)")
        for u in self.units:
            if u not in IMAGINARY:
                raise ValueError(f"{u!r} is not an imaginary basis unit")
        if self.kind == "T" and self.units[0] == self.units[1]:
            raise ValueError("a transverse rotation needs two distinct units")

    @property
    def is_rotation(self) -> bool:
        return self.kind not in BOOSTS

    @property
    def is_elementary(self) -> bool:
        return self.kind not in COMPOSITES

    def retyped(self, a: int) -> "GeneratorName":
        return GeneratorName(self.kind, self.units, a)

    @property
    def label(self) -> str:
        a = self.type_index
        u = [UNIT_NAMES[n] for n in self.units]
        if self.kind[0] in "BR":
            plane = self.kind[1:]
            if plane.endswith("q"):
                plane = plane[:-1] + u[0]
            return f"{self.kind[0]}{a}_{plane}"
        if self.kind == "T":
            return f"T{a}_{u[0]}_{u[1]}"
        return f"{self.kind}{a}_{u[0]}"

    def __str__(self):
        return self.label

    @classmethod
    def parse(cls, text: str) -> "GeneratorName":
        m = re.fullmatch(r"([BRTAGS])([123]?)_(.+)", text.strip())
        if not m:
            raise ValueError(f"cannot parse generator name {text!r}")
        letter, a, rest = m.group(1), int(m.group(2) or 1), m.group(3)
        if letter == "T":
            p, _, q = rest.partition("_")
            return cls("T", (_unit(p), _unit(q)), a)
        if letter in "AGS":
            return cls(letter, (_unit(rest),), a)
        first = {"B": "t", "R": "xz"}[letter]
        if rest[0] not in first or len(rest) < 2:
            raise ValueError(f"cannot parse generator name {text!r}")
        head, tail = rest[0], rest[1:]
        if tail in ("z", "x") and not (letter == "R" and head == "z"):
            return cls(f"{letter}{head}{tail}", (), a)
        return cls(f"{letter}{head}q", (_unit(tail),), a)


def _unit(name: str) -> int:
    if name not in UNIT_INDEX or name == "1":
        raise ValueError(f"{name!r} is not an imaginary basis unit")
    return UNIT_INDEX[name]


def plane_pairs() -> list[tuple[int, int]]:
    """The 21 oriented planes, in the order the quaternionic pair listing gives them."""
    out = []
    for r in UNIT_NAMES[1:]:
        for p, q in QUATERNIONIC_PAIRS[r]:
            out.append((UNIT_INDEX[p], UNIT_INDEX[q]))
    return out


def composite_planes(q: int) -> tuple:
    return tuple((UNIT_INDEX[a], UNIT_INDEX[b]) for a, b in QUATERNIONIC_PAIRS[UNIT_NAMES[q]])


# plane coefficients of A_q, G_q, S_q on the three planes of q
COMPOSITE_WEIGHTS = {"A": (1, -1, 0), "G": (1, 1, -2), "S": (1, 1, 1)}


def generators_of_type(a: int) -> list[GeneratorName]:
    """The 45 transformations of one type: 9 boosts, 15 simple rotations, 21 of A/G/S."""
    out = [GeneratorName("Btz", (), a), GeneratorName("Btx", (), a)]
    out += [GeneratorName("Btq", (q,), a) for q in IMAGINARY]
    out.append(GeneratorName("Rxz", (), a))
    out += [GeneratorName("Rxq", (q,), a) for q in IMAGINARY]
    out += [GeneratorName("Rzq", (q,), a) for q in IMAGINARY]
    for kind in COMPOSITES:
        out += [GeneratorName(kind, (q,), a) for q in IMAGINARY]
    return out


def all_generators() -> list[GeneratorName]:
    return [g for a in (1, 2, 3) for g in generators_of_type(a)]


def elementary_generators(types=(1, 2, 3)) -> list[GeneratorName]:
    """Single-row transformations: boosts, simple rotations and plane rotations."""
    out = []
    for a in types:
        out += [g for g in generators_of_type(a) if g.is_elementary]
        out += [GeneratorName("T", pq, a) for pq in plane_pairs()]
    return out


# --- scalar helpers -------------------------------------------------------------

def _scale(alpha, c):
    if isinstance(alpha, float):
        return alpha * float(c)
    return alpha * Fraction(c)


def _is_float(x) -> bool:
    return isinstance(x, float)


# --- matrix conjugation ---------------------------------------------------------

def _embed(m2) -> list:
    """``diag(M, 1)`` as a sparse 3x3 octonionic matrix (``None`` marks zero)."""
    z = None
    one = Octonion.real(1)
    return [[m2[0][0], m2[0][1], z], [m2[1][0], m2[1][1], z], [z, z, one]]


def _dagger(m):
    return [[None if m[c][r] is None else oct_conj(m[c][r]) for c in range(3)] for r in range(3)]


def _sparse_mul(a, b):
    out = []
    for r in range(3):
        row = []
        for c in range(3):
            acc = None
            for k in range(3):
                x, y = a[r][k], b[k][c]
                if x is None or y is None:
                    continue
                p = oct_mul(x, y)
                acc = p if acc is None else acc + p
            row.append(acc)
        out.append(row)
    return out


def _dense(m):
    return [[Octonion() if e is None else e for e in row] for row in m]


def _close(a, b, tol):
    if tol is None:
        return a == b
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


def conjugate(M, X: JordanElement, check: bool = False, tol: float = 1e-10) -> JordanElement:
    """``(M X) M^dagger``; with ``check`` also evaluate ``M (X M^dagger)`` and compare."""
    xm = X.to_matrix()
    md = _dagger(M)
    left = _dense(_sparse_mul(_sparse_mul(M, xm), md))
    if not check:
        return JordanElement.from_matrix(left)
    right = _dense(_sparse_mul(M, _sparse_mul(xm, md)))
    ftol = tol if any(_is_float(v) for row in left for e in row for v in e.c) else None
    for r in range(3):
        for c in range(3):
            for a, b in zip(left[r][c].c, right[r][c].c):
                if not _close(a, b, ftol):
                    raise AssociationMismatch(f"entry ({r},{c}): {a} != {b}")

    def herm(a, b):
        if not _close(a, b, ftol):
            raise AssociationMismatch(f"result is not Hermitian: {a} != {b}")

    return JordanElement.from_matrix(left, check=herm)


def _u(q, s):
    return Octonion.unit(q, s)


def _r(s):
    return Octonion.real(s)


def type1_matrices(kind: str, units: tuple, alpha) -> list:
    """Table of 2x2 generator matrices; plane rotations return two (applied in order)."""
    h = _scale(alpha, Fraction(1, 2))
    ch, sh = scalars.cosh(h), scalars.sinh(h)
    c, s = scalars.cos(h), scalars.sin(h)
    if kind == "Btz":
        return [[[_r(scalars.exp(h)), None], [None, _r(scalars.exp(-h))]]]
    if kind == "Btx":
        return [[[_r(ch), _r(sh)], [_r(sh), _r(ch)]]]
    if kind == "Btq":
        q = units[0]
        return [[[_r(ch), _u(q, -sh)], [_u(q, sh), _r(ch)]]]
    if kind == "Rxz":
        return [[[_r(c), _r(s)], [_r(-s), _r(c)]]]
    if kind == "Rxq":
        q = units[0]
        minus = Octonion.real(c) + _u(q, -s)
        plus = Octonion.real(c) + _u(q, s)
        return [[[minus, None], [None, plus]]]
    if kind == "Rzq":
        q = units[0]
        return [[[_r(c), _u(q, s)], [_u(q, s), _r(c)]]]
    if kind == "T":
        p, q = units
        m1 = _u(p, -1)
        m2 = _u(p, c) + _u(q, s)
        return [[[m1, None], [None, m1]], [[m2, None], [None, m2]]]
    raise ValueError(f"{kind} has no single matrix form")


class GroupAction:
    """A one-parameter family ``alpha -> R(alpha)`` acting on H3(O)."""

    def __init__(self, name: GeneratorName, fn: Callable):
        self.name = name
        self._fn = fn

    def __call__(self, alpha, X: JordanElement, check: bool = False, tol: float = 1e-10):
        return self._fn(alpha, X, check, tol)

    def __repr__(self):
        return f"GroupAction({self.name})"


def _type1_action(kind: str, units: tuple):
    def fn(alpha, X, check, tol):
        for m2 in type1_matrices(kind, units, alpha):
            X = conjugate(_embed(m2), X, check, tol)
        return X
    return fn


def _composite_action(kind: str, q: int):
    steps = [(pq, w) for pq, w in zip(composite_planes(q), COMPOSITE_WEIGHTS[kind]) if w]

    def fn(alpha, X, check, tol):
        # R_1(a) o R_2(b) o R_3(c): the rightmost factor acts first
        for pq, w in reversed(steps):
            for m2 in type1_matrices("T", pq, _scale(alpha, w)):
                X = conjugate(_embed(m2), X, check, tol)
        return X
    return fn


def retype(fn: Callable, a: int) -> Callable:
    """Conjugate a type-1 action by the type permutation ``a - 1`` times."""
    if a == 1:
        return fn

    def retyped(alpha, X, check, tol):
        return shift(fn(alpha, shift(X, -(a - 1)), check, tol), a - 1)
    return retyped


def build_generator(name) -> GroupAction:
    if isinstance(name, str):
        name = GeneratorName.parse(name)
    if name.kind in COMPOSITES:
        fn = _composite_action(name.kind, name.units[0])
    else:
        fn = _type1_action(name.kind, name.units)
    return GroupAction(name, retype(fn, name.type_index))


def apply(action, alpha, X: JordanElement, check: bool = False, tol: float = 1e-10):
    if not isinstance(action, GroupAction):
        action = build_generator(action)
    return action(alpha, X, check, tol)


def compose(*steps):
    """``compose((g1, a1), (g2, a2), ...)`` acts as ``g1(a1) o g2(a2) o ...``."""
    actions = [(build_generator(g) if not isinstance(g, GroupAction) else g, a) for g, a in steps]

    def run(X, check=False, tol=1e-10):
        for act, a in reversed(actions):
            X = act(a, X, check, tol)
        return X
    return run


# --- type permutation identities -------------------------------------------------

TYPE_IDENTITIES = {
    "T = R1xz(-pi) o R2xz(-pi)": (("R1_xz", -math.pi), ("R2_xz", -math.pi)),
    "T = R2xz(pi) o R1xz(pi) o R2xz(pi) o R1xz(pi)": (
        ("R2_xz", math.pi), ("R1_xz", math.pi), ("R2_xz", math.pi), ("R1_xz", math.pi)),
    "T = R1xz(pi) o R3xz(pi) o R2xz(pi) o R1xz(pi)": (
        ("R1_xz", math.pi), ("R3_xz", math.pi), ("R2_xz", math.pi), ("R1_xz", math.pi)),
}


def max_abs_diff(X: JordanElement, Y: JordanElement) -> float:
    return max(abs(float(a) - float(b)) for a, b in zip(X.coordinates(), Y.coordinates()))


def type_permutation_identities(samples, tol: float = 1e-10) -> dict:
    """Evaluate each product identity against ``X -> T X T^dagger`` on sample points."""
    report = {}
    for label, steps in TYPE_IDENTITIES.items():
        run = compose(*steps)
        err = max(max_abs_diff(run(X), shift(X, 1)) for X in samples)
        report[label] = (err <= tol, err)
    return report
