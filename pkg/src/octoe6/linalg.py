"""Exact linear algebra over the rationals.

Rows are plain Python sequences of ints or Fractions.  Elimination is
fraction-free: rational rows are cleared to primitive integer rows and pivot
steps use cross multiplication followed by a gcd reduction.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

import numpy as np


class NotInSpan(ArithmeticError):
    """A vector is not a combination of the given basis."""


def primitive(v: Sequence) -> list[int]:
    """Positive rational multiple of ``v`` with coprime integer entries."""
    den = 1
    for x in v:
        if isinstance(x, Fraction):
            den = den * x.denominator // math.gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = reduce(math.gcd, ints, 0)
    return [x // g for x in ints] if g > 1 else ints


def _leading(v) -> int:
    for n, x in enumerate(v):
        if x:
            return n
    return -1


class Echelon:
    """Incrementally maintained integer row-echelon basis of a rational subspace."""

    def __init__(self, width: int, rows: Iterable = ()):
        self.width = width
        self.rows: list[list[int]] = []
        self.pivots: list[int] = []
        for r in rows:
            self.add(r)

    def __len__(self):
        return len(self.rows)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, v) -> list[int]:
        v = primitive(v)
        if len(v) != self.width:
            raise ValueError(f"expected length {self.width}")
        for p, row in zip(self.pivots, self.rows):
            x = v[p]
            if x:
                a = row[p]
                v = [a * s - x * r for s, r in zip(v, row)]
                g = reduce(math.gcd, v, 0)
                if g > 1:
                    v = [s // g for s in v]
        return v

    def contains(self, v) -> bool:
        return not any(self.reduce(v))

    def insert(self, v) -> list[int] | None:
        """Insert ``v``; returns its reduced row if the span grew, else ``None``."""
        r = self.reduce(v)
        p = _leading(r)
        if p < 0:
            return None
        if r[p] < 0:
            r = [-x for x in r]
        at = 0
        while at < len(self.pivots) and self.pivots[at] < p:
            at += 1
        self.pivots.insert(at, p)
        self.rows.insert(at, r)
        return r

    def add(self, v) -> bool:
        """Insert ``v``; returns True when it enlarged the span."""
        return self.insert(v) is not None

    def contains_all(self, other: "Echelon") -> bool:
        return all(self.contains(r) for r in other.rows)

    def basis(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def rank(rows: Iterable[Sequence]) -> int:
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    ech = Echelon(len(rows[0]))
    for r in rows:
        ech.add(r)
    return ech.dim


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Fractions and its pivot columns."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(rows: Sequence[Sequence], width: int | None = None) -> list[list[Fraction]]:
    """Basis of ``{x : rows @ x = 0}``."""
    if not rows:
        if width is None:
            raise ValueError("width needed for an empty system")
        return [[Fraction(int(i == j)) for j in range(width)] for i in range(width)]
    red, pivots = rref(rows)
    ncols = len(rows[0])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(red, pivots):
            x[p] = -row[f]
        basis.append(x)
    return basis


def inverse(m: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in red]


def determinant(m: Sequence[Sequence]) -> Fraction:
    """Bareiss determinant of a rational square matrix."""
    n = len(m)
    den = 1
    for row in m:
        for x in row:
            if isinstance(x, Fraction):
                den = den * x.denominator // math.gcd(den, x.denominator)
    a = [[int(x * den) for x in row] for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return Fraction(sign * a[n - 1][n - 1], den ** n) if n else Fraction(1)


def inertia(sym: Sequence[Sequence]) -> tuple[int, int, int]:
    """``(negative, zero, positive)`` counts of a symmetric rational form, by congruence."""
    a = [[Fraction(x) for x in row] for row in sym]
    n = len(a)
    for i in range(n):
        for j in range(i):
            if a[i][j] != a[j][i]:
                raise ValueError("matrix is not symmetric")
    neg = pos = 0
    k = 0
    while k < n:
        piv = next((i for i in range(k, n) if a[i][i]), None)
        if piv is None:
            hit = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if a[i][j]), None)
            if hit is None:
                break
            i, j = hit
            # e_i -> e_i + e_j turns the zero diagonal entry into 2 a_ij
            for c in range(n):
                a[i][c] += a[j][c]
            for r in range(n):
                a[r][i] += a[r][j]
            piv = i
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            for row in a:
                row[k], row[piv] = row[piv], row[k]
        d = a[k][k]
        if d < 0:
            neg += 1
        else:
            pos += 1
        for r in range(k + 1, n):
            f = a[r][k]
            if f:
                f = f / d
                for c in range(k, n):
                    a[r][c] -= f * a[k][c]
        for r in range(k + 1, n):
            a[k][r] = Fraction(0)
            a[r][k] = Fraction(0)
        k += 1
    return neg, n - neg - pos, pos


class SpanSolver:
    """Exact coordinates with respect to a fixed list of independent integer vectors.

    A set of pivot coordinates is chosen on which the basis is invertible;
    solving uses only those coordinates and every answer is then certified by
    recombining the full vector.
    """

    def __init__(self, vectors: np.ndarray):
        basis = np.asarray(vectors, dtype=np.int64)  # (n, width)
        self.basis = basis
        n = basis.shape[0]
        ech = Echelon(basis.shape[1])
        for row in basis:
            if not ech.add([int(x) for x in row]):
                raise ValueError("basis vectors are linearly dependent")
        self.pivots = list(ech.pivots)
        sub = [[int(basis[r, p]) for r in range(n)] for p in self.pivots]  # v_piv = sub @ c
        inv = inverse(sub)
        den = 1
        for row in inv:
            for x in row:
                den = den * x.denominator // math.gcd(den, x.denominator)
        self.inv_den = den
        self.inv_num = np.array([[int(x * den) for x in row] for row in inv], dtype=object)

    def solve_many(self, nums: np.ndarray, den: int = 1) -> tuple[np.ndarray, int]:
        """Coordinates of the rows of ``nums / den``, as ``(integer array, denominator)``.

        Raises :class:`NotInSpan` if any row is not in the span.
        """
        nums = np.asarray(nums, dtype=np.int64)
        if nums.ndim == 1:
            nums = nums[None, :]
        piv = nums[:, self.pivots].astype(object)
        coeff = piv @ self.inv_num.T  # object ints
        cden = self.inv_den * den
        recon = _exact_matmul(coeff, self.basis)
        target = nums.astype(object) * self.inv_den
        bad = np.flatnonzero((recon != target).any(axis=1))
        if bad.size:
            raise NotInSpan(f"{bad.size} vector(s) outside the span, first at row {bad[0]}")
        return coeff, cden

    def solve(self, vec, den: int = 1) -> list[Fraction]:
        coeff, cden = self.solve_many(np.asarray(vec)[None, :], den)
        return [Fraction(int(x), cden) for x in coeff[0]]


def _exact_matmul(a_obj: np.ndarray, b_int: np.ndarray) -> np.ndarray:
    """Exact integer product, using int64 when the entries provably fit."""
    amax = max((abs(int(x)) for x in a_obj.flat), default=0)
    bmax = int(np.abs(b_int).max()) if b_int.size else 0
    if amax * bmax * max(1, a_obj.shape[1]) < 2 ** 62:
        return (a_obj.astype(np.int64) @ b_int).astype(object)
    return a_obj @ b_int.astype(object)
