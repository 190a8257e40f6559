"""Octonions over an arbitrary scalar ring.

Basis order is ``(1, i, j, k, kl, jl, il, l)`` where ``l`` stands for the unit
usually written as a script ell.  The multiplication table is generated from
the 21 ordered quaternionic pairs below; each pair ``(p, q)`` listed under a
unit ``r`` means ``p * q = r``.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

UNIT_NAMES = ("1", "i", "j", "k", "kl", "jl", "il", "l")
UNIT_INDEX = {name: n for n, name in enumerate(UNIT_NAMES)}
IMAGINARY = tuple(range(1, 8))

# unit -> three ordered pairs spanning a quaternionic subalgebra with it
QUATERNIONIC_PAIRS = {
    "i": (("j", "k"), ("kl", "jl"), ("l", "il")),
    "j": (("k", "i"), ("il", "kl"), ("l", "jl")),
    "k": (("i", "j"), ("jl", "il"), ("l", "kl")),
    "kl": (("jl", "i"), ("j", "il"), ("k", "l")),
    "jl": (("i", "kl"), ("il", "k"), ("j", "l")),
    "il": (("kl", "j"), ("k", "jl"), ("i", "l")),
    "l": (("il", "i"), ("jl", "j"), ("kl", "k")),
}

SUBALGEBRA_UNITS = {
    "R": frozenset({0}),
    "C": frozenset({0, UNIT_INDEX["l"]}),
    "H": frozenset({0, UNIT_INDEX["k"], UNIT_INDEX["kl"], UNIT_INDEX["l"]}),
    "O": frozenset(range(8)),
}


class TableInconsistency(ValueError):
    pass


def _build_table():
    """Signed product table ``table[a][b] = (sign, c)`` meaning ``e_a e_b = sign e_c``."""
    table = [[None] * 8 for _ in range(8)]

    def put(a, b, sign, c):
        old = table[a][b]
        if old is not None and old != (sign, c):
            raise TableInconsistency(
                f"{UNIT_NAMES[a]}*{UNIT_NAMES[b]} forced to both {old} and {(sign, c)}")
        table[a][b] = (sign, c)

    for a in range(8):
        put(0, a, 1, a)
        put(a, 0, 1, a)
    for a in IMAGINARY:
        put(a, a, -1, 0)
    for r, pairs in QUATERNIONIC_PAIRS.items():
        c = UNIT_INDEX[r]
        for p, q in pairs:
            a, b = UNIT_INDEX[p], UNIT_INDEX[q]
            # p q = r and its cyclic shifts, plus anticommutativity
            for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
                put(x, y, 1, z)
                put(y, x, -1, z)
    missing = [(a, b) for a in range(8) for b in range(8) if table[a][b] is None]
    if missing:
        raise TableInconsistency(f"products left undetermined: {missing}")
    return tuple(tuple(row) for row in table)


TABLE = _build_table()


class Octonion:
    """An octonion with 8 coefficients from any commutative scalar ring."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Sequence = (0,) * 8):
        c = tuple(coeffs)
        if len(c) != 8:
            raise ValueError("an octonion has exactly 8 coefficients")
        self.c = c

    @classmethod
    def unit(cls, which, scale=1) -> "Octonion":
        n = UNIT_INDEX[which] if isinstance(which, str) else int(which)
        c = [0] * 8
        c[n] = scale
        return cls(c)

    @classmethod
    def zero(cls) -> "Octonion":
        return cls()

    @classmethod
    def real(cls, x) -> "Octonion":
        return cls((x,) + (0,) * 7)

    def __getitem__(self, n):
        return self.c[n]

    def __iter__(self):
        return iter(self.c)

    def __eq__(self, other):
        if isinstance(other, Octonion):
            return self.c == other.c
        return NotImplemented

    def __hash__(self):
        return hash(self.c)

    def __bool__(self):
        return any(bool(x) for x in self.c)

    def __repr__(self):
        terms = [f"{x}*{UNIT_NAMES[n]}" for n, x in enumerate(self.c) if x]
        return "Octonion(" + (" + ".join(terms) if terms else "0") + ")"

    def __add__(self, other):
        if isinstance(other, Octonion):
            return Octonion([a + b for a, b in zip(self.c, other.c)])
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, Octonion):
            return Octonion([a - b for a, b in zip(self.c, other.c)])
        return NotImplemented

    def __neg__(self):
        return Octonion([-a for a in self.c])

    def __mul__(self, other):
        if isinstance(other, Octonion):
            return oct_mul(self, other)
        return Octonion([a * other for a in self.c])

    def __rmul__(self, other):
        return Octonion([other * a for a in self.c])

    def __truediv__(self, other):
        return Octonion([a / other for a in self.c])

    def conj(self) -> "Octonion":
        return oct_conj(self)

    @property
    def re(self):
        return self.c[0]

    def norm2(self):
        return oct_norm2(self)

    def map(self, f) -> "Octonion":
        return Octonion([f(a) for a in self.c])


def oct_mul(a: Octonion, b: Octonion) -> Octonion:
    out = [0] * 8
    bc = [(n, y) for n, y in enumerate(b.c) if y]
    for m, x in enumerate(a.c):
        if not x:
            continue
        row = TABLE[m]
        for n, y in bc:
            sign, k = row[n]
            if sign > 0:
                out[k] = out[k] + x * y
            else:
                out[k] = out[k] - x * y
    return Octonion(out)


def oct_conj(a: Octonion) -> Octonion:
    c = a.c
    return Octonion((c[0],) + tuple(-x for x in c[1:]))


def oct_real(a: Octonion):
    return a.c[0]


def oct_norm2(a: Octonion):
    total = 0
    for x in a.c:
        total = total + x * x
    return total


def associator(a: Octonion, b: Octonion, c: Octonion) -> Octonion:
    return oct_mul(oct_mul(a, b), c) - oct_mul(a, oct_mul(b, c))


def subalgebra_membership(a: Octonion, which: str) -> bool:
    """True iff ``a`` lies in the preferred real, complex or quaternionic span."""
    allowed = SUBALGEBRA_UNITS[which]
    return all(not x for n, x in enumerate(a.c) if n not in allowed)


def basis() -> list[Octonion]:
    return [Octonion.unit(n) for n in range(8)]


def product_table_rows() -> list[list[str]]:
    """The 8x8 table as signed unit names, for printing."""
    rows = []
    for a in range(8):
        row = []
        for b in range(8):
            sign, c = TABLE[a][b]
            row.append(("-" if sign < 0 else "") + UNIT_NAMES[c])
        rows.append(row)
    return rows


def format_table() -> str:
    rows = product_table_rows()
    width = 4
    lines = [" " * width + "".join(n.rjust(width) for n in UNIT_NAMES)]
    for name, row in zip(UNIT_NAMES, rows):
        lines.append(name.rjust(width) + "".join(e.rjust(width) for e in row))
    return "\n".join(lines)


def quaternionic_triples() -> Iterable[tuple[int, int, int]]:
    """All ordered triples ``(p, q, r)`` of imaginary units with ``p q = r``."""
    for a, b in itertools.permutations(IMAGINARY, 2):
        sign, c = TABLE[a][b]
        if sign > 0:
            yield a, b, c
