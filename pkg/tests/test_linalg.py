from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from octoe6 import linalg

small = st.integers(-4, 4)


def matrices(rows, cols):
    return st.lists(st.lists(small, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


square = st.integers(1, 6).flatmap(lambda n: matrices(n, n))
rect = st.tuples(st.integers(1, 6), st.integers(1, 7)).flatmap(lambda s: matrices(*s))


@settings(max_examples=80, deadline=None)
@given(rect)
def test_rank_matches_sympy(m):
    assert linalg.rank(m) == sympy.Matrix(m).rank()


@settings(max_examples=80, deadline=None)
@given(square)
def test_determinant_matches_sympy(m):
    assert linalg.determinant(m) == Fraction(int(sympy.Matrix(m).det()))


def test_determinant_rational_entries():
    m = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 4), Fraction(1, 5)]]
    assert linalg.determinant(m) == Fraction(1, 10) - Fraction(1, 12)


@settings(max_examples=60, deadline=None)
@given(rect)
def test_nullspace(m):
    width = len(m[0])
    ns = linalg.nullspace(m, width)
    assert len(ns) == width - sympy.Matrix(m).rank()
    for v in ns:
        assert all(sum(Fraction(a) * b for a, b in zip(row, v)) == 0 for row in m)


@settings(max_examples=60, deadline=None)
@given(square)
def test_inverse(m):
    if sympy.Matrix(m).det() == 0:
        with pytest.raises(ZeroDivisionError):
            linalg.inverse(m)
        return
    inv = linalg.inverse(m)
    n = len(m)
    for i in range(n):
        for j in range(n):
            assert sum(Fraction(m[i][k]) * inv[k][j] for k in range(n)) == (i == j)


@settings(max_examples=80, deadline=None)
@given(square)
def test_inertia_matches_eigenvalues(m):
    a = np.array(m)
    sym = (a + a.T).tolist()
    neg, zero, pos = linalg.inertia(sym)
    ev = [complex(e).real for e in sympy.Matrix(sym).eigenvals(multiple=True)]
    assert zero == len(sym) - sympy.Matrix(sym).rank()
    assert neg == sum(e < -1e-9 for e in ev)
    assert pos == sum(e > 1e-9 for e in ev)


def test_inertia_zero_diagonal():
    # hyperbolic plane: needs the off-diagonal fix-up
    assert linalg.inertia([[0, 1], [1, 0]]) == (1, 0, 1)
    assert linalg.inertia([[0, 0], [0, 0]]) == (0, 2, 0)
    with pytest.raises(ValueError):
        linalg.inertia([[0, 1], [2, 0]])


def test_echelon_insert_and_contains():
    e = linalg.Echelon(3)
    assert e.insert([0, 2, 4]) == [0, 1, 2]
    assert e.insert([0, -3, -6]) is None
    row = e.insert([1, 1, 1])
    assert row is not None and row[0] > 0
    assert e.pivots == sorted(e.pivots) and e.dim == 2
    assert e.contains([2, 5, 8]) and not e.contains([0, 0, 1])
    with pytest.raises(ValueError):
        e.reduce([1, 2])


@settings(max_examples=40, deadline=None)
@given(rect, st.lists(small, min_size=7, max_size=7))
def test_echelon_membership_oracle(m, extra):
    width = len(m[0])
    v = extra[:width]
    e = linalg.Echelon(width, m)
    in_span = sympy.Matrix(m + [v]).rank() == sympy.Matrix(m).rank()
    assert e.contains(v) is in_span


def test_primitive():
    assert linalg.primitive([Fraction(1, 2), Fraction(-3, 4), 0]) == [2, -3, 0]
    assert linalg.primitive([0, 0]) == [0, 0]


def test_span_solver_certifies():
    basis = np.array([[1, 0, 2, 0], [0, 3, 0, 1]])
    s = linalg.SpanSolver(basis)
    assert s.solve([2, 3, 4, 1]) == [2, 1]
    assert s.solve([1, 0, 2, 0], den=2) == [Fraction(1, 2), 0]
    with pytest.raises(linalg.NotInSpan):
        s.solve([1, 0, 0, 0])
    with pytest.raises(ValueError):
        linalg.SpanSolver(np.array([[1, 2], [2, 4]]))
