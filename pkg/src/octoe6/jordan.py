"""The exceptional Jordan algebra H3(O) of 3x3 octonionic Hermitian matrices.

An element is stored as three real diagonal entries ``d = (d1, d2, d3)`` and
three octonions ``x = (x1, x2, x3)`` with ``x_n`` sitting opposite ``d_n``::

    [[ d1,       x3,       conj(x2) ],
     [ conj(x3), d2,       x1       ],
     [ x2,       conj(x1), d3       ]]

Coordinates are the 27-vector ``(d1, d2, d3, x1[0:8], x2[0:8], x3[0:8])``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .octonion import Octonion, oct_conj, oct_mul
from .scalars import format_rational, parse_rational

DIM = 27

# (row, col) of x1, x2, x3 in the upper/lower pattern used above
OFFDIAG_POS = {0: (1, 2), 1: (2, 0), 2: (0, 1)}


def d_index(n: int) -> int:
    return n


def x_slice(n: int) -> slice:
    return slice(3 + 8 * n, 11 + 8 * n)


@dataclass(frozen=True)
class JordanElement:
    d: tuple
    x: tuple  # three Octonions

    def __post_init__(self):
        if len(self.d) != 3 or len(self.x) != 3:
            raise ValueError("need three diagonal scalars and three octonions")

    @classmethod
    def from_coordinates(cls, v: Sequence) -> "JordanElement":
        v = list(v)
        if len(v) != DIM:
            raise ValueError(f"expected {DIM} coordinates, got {len(v)}")
        return cls(tuple(v[:3]), tuple(Octonion(v[x_slice(n)]) for n in range(3)))

    @classmethod
    def basis(cls, k: int) -> "JordanElement":
        v = [0] * DIM
        v[k] = 1
        return cls.from_coordinates(v)

    @classmethod
    def identity(cls) -> "JordanElement":
        return cls((1, 1, 1), (Octonion(), Octonion(), Octonion()))

    @classmethod
    def diag(cls, a, b, c) -> "JordanElement":
        return cls((a, b, c), (Octonion(), Octonion(), Octonion()))

    def coordinates(self) -> list:
        out = list(self.d)
        for o in self.x:
            out.extend(o.c)
        return out

    def __add__(self, other):
        return JordanElement.from_coordinates(
            [a + b for a, b in zip(self.coordinates(), other.coordinates())])

    def __sub__(self, other):
        return JordanElement.from_coordinates(
            [a - b for a, b in zip(self.coordinates(), other.coordinates())])

    def scale(self, s) -> "JordanElement":
        return JordanElement.from_coordinates([s * a for a in self.coordinates()])

    def to_matrix(self) -> list[list[Octonion]]:
        m = [[None] * 3 for _ in range(3)]
        for n in range(3):
            m[n][n] = Octonion.real(self.d[n])
        for n, (r, c) in OFFDIAG_POS.items():
            m[r][c] = self.x[n]
            m[c][r] = oct_conj(self.x[n])
        return m

    @classmethod
    def from_matrix(cls, m, check=None) -> "JordanElement":
        """Read a Hermitian octonionic matrix; ``check(a, b)`` may compare mirrored entries."""
        if check is not None:
            for n in range(3):
                for k in range(1, 8):
                    check(m[n][n].c[k], 0)
            for r, c in OFFDIAG_POS.values():
                for a, b in zip(m[r][c].c, oct_conj(m[c][r]).c):
                    check(a, b)
        return cls(tuple(m[n][n].c[0] for n in range(3)),
                   tuple(m[r][c] for r, c in (OFFDIAG_POS[0], OFFDIAG_POS[1], OFFDIAG_POS[2])))

    def to_json(self) -> dict:
        return {
            "d": [format_rational(a) for a in self.d],
            **{f"x{n + 1}": [format_rational(a) for a in self.x[n].c] for n in range(3)},
        }

    @classmethod
    def from_json(cls, obj: dict) -> "JordanElement":
        return cls(tuple(parse_rational(a) for a in obj["d"]),
                   tuple(Octonion([parse_rational(a) for a in obj[f"x{n + 1}"]]) for n in range(3)))


def freudenthal_det(X: JordanElement):
    """Cubic norm of ``X``."""
    d1, d2, d3 = X.d
    x1, x2, x3 = X.x
    return (d1 * d2 * d3 - d1 * x1.norm2() - d2 * x2.norm2() - d3 * x3.norm2()
            + 2 * oct_mul(oct_mul(x1, x2), x3).c[0])


def trace(X: JordanElement):
    d1, d2, d3 = X.d
    return d1 + d2 + d3


def matmul(a, b):
    """Product of two 3x3 octonionic matrices (entries combine without reassociation)."""
    out = []
    for r in range(3):
        row = []
        for c in range(3):
            acc = Octonion()
            for m in range(3):
                acc = acc + oct_mul(a[r][m], b[m][c])
            row.append(acc)
        out.append(row)
    return out


def _div(x, n: int):
    if isinstance(x, int):
        return Fraction(x, n)
    return x / n


def jordan_product(X: JordanElement, Y: JordanElement) -> JordanElement:
    """``(XY + YX) / 2`` computed with full octonionic matrix products."""
    xm, ym = X.to_matrix(), Y.to_matrix()
    xy, yx = matmul(xm, ym), matmul(ym, xm)
    total = JordanElement.from_matrix(
        [[xy[r][c] + yx[r][c] for c in range(3)] for r in range(3)])
    return JordanElement.from_coordinates([_div(v, 2) for v in total.coordinates()])


def det_via_jordan_powers(X: JordanElement):
    """Independent determinant: ``tr(X^3)/3 - tr(X) tr(X^2)/2 + tr(X)^3/6``.

    Uses only Jordan powers and traces, so it shares no code with the
    cubic-form expansion in :func:`freudenthal_det`.
    """
    x2 = jordan_product(X, X)
    x3 = jordan_product(x2, X)
    t1, t2, t3 = trace(X), trace(x2), trace(x3)
    return _div(2 * t3 - 3 * t1 * t2 + t1 * t1 * t1, 6)


def shift(X: JordanElement, power: int = 1) -> JordanElement:
    """Conjugation by the type permutation, ``X -> T X T^dagger`` applied ``power`` times.

    It cycles ``(d1, d2, d3) -> (d3, d1, d2)`` and likewise for ``x``.
    """
    p = power % 3
    d, x = X.d, X.x
    for _ in range(p):
        d = (d[2], d[0], d[1])
        x = (x[2], x[0], x[1])
    return JordanElement(d, x)


TYPE_PERMUTATION = ((0, 0, 1), (1, 0, 0), (0, 1, 0))


def conjugate_by_permutation(X: JordanElement, perm=TYPE_PERMUTATION) -> JordanElement:
    """Literal ``P X P^T`` with a real 3x3 matrix ``P``; reference for :func:`shift`."""
    m = X.to_matrix()
    p = [[Octonion.real(perm[r][c]) for c in range(3)] for r in range(3)]
    pt = [[p[c][r] for c in range(3)] for r in range(3)]
    return JordanElement.from_matrix(matmul(matmul(p, m), pt))


def type_blocks(X: JordanElement, a: int):
    """Split ``X`` into (2x2 vector block, spinor column, corner scalar) for type ``a``."""
    if a not in (1, 2, 3):
        raise ValueError("type index must be 1, 2 or 3")
    Y = shift(X, -(a - 1))
    d1, d2, d3 = Y.d
    x1, x2, x3 = Y.x
    vector = ((Octonion.real(d1), x3), (oct_conj(x3), Octonion.real(d2)))
    spinor = (oct_conj(x2), x1)
    return vector, spinor, d3


def vector_block_coordinates(a: int) -> list[int]:
    """Coord27 indices of the type-``a`` 2x2 vector block (10 of them)."""
    n = a - 1
    return [d_index(n), d_index((n + 1) % 3)] + list(range(27))[x_slice((n + 2) % 3)]
