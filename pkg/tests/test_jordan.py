import itertools
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from octoe6.jordan import (JordanElement, conjugate_by_permutation, det_via_jordan_powers,
                           freudenthal_det, jordan_product, shift, trace, type_blocks,
                           vector_block_coordinates)
from octoe6.octonion import TABLE, Octonion, oct_conj

q = st.fractions(min_value=-4, max_value=4, max_denominator=5)
elements = st.lists(q, min_size=27, max_size=27).map(JordanElement.from_coordinates)


def _mul_float(a, b):
    out = np.zeros(8)
    for i in range(8):
        for j in range(8):
            s, k = TABLE[i][j]
            out[k] += s * a[i] * b[j]
    return out


def entrywise_det(X: JordanElement) -> float:
    """Cubic form read off the float 3x3 matrix: diagonal product, minus diagonal times
    opposite |entry|^2, plus twice the real part of one cyclic product a01 a12 a20."""
    m = [[np.array([float(c) for c in e.c]) for e in row] for row in X.to_matrix()]
    d = [m[n][n][0] for n in range(3)]
    total = d[0] * d[1] * d[2]
    for n, (r, c) in enumerate([(1, 2), (2, 0), (0, 1)]):
        total -= d[n] * float(m[r][c] @ m[r][c])
    return total + 2 * _mul_float(_mul_float(m[0][1], m[1][2]), m[2][0])[0]


def test_det_examples():
    assert freudenthal_det(JordanElement.identity()) == 1
    assert freudenthal_det(JordanElement.diag(2, 3, Fraction(1, 5))) == Fraction(6, 5)


def test_det_off_diagonal_example():
    X = JordanElement((0, 0, 0), (Octonion.unit("i"), Octonion.unit("j"), -Octonion.unit("k")))
    assert float(freudenthal_det(X)) == pytest.approx(entrywise_det(X))
    assert freudenthal_det(X) == det_via_jordan_powers(X) == 2  # (ij)(-k) = 1


@settings(max_examples=100, deadline=None)
@given(elements)
def test_det_matches_entrywise_expansion(X):
    assert float(freudenthal_det(X)) == pytest.approx(entrywise_det(X), rel=1e-9, abs=1e-9)


@settings(max_examples=25, deadline=None)
@given(elements)
def test_det_matches_jordan_powers(X):
    assert freudenthal_det(X) == det_via_jordan_powers(X)


def test_trace_and_unit():
    I = JordanElement.identity()
    assert trace(I) == 3
    X = JordanElement.from_coordinates([Fraction(n, 3) for n in range(27)])
    assert jordan_product(X, I) == X


def test_square_of_single_off_diagonal():
    X = JordanElement((0, 0, 0), (Octonion.unit("i"), Octonion(), Octonion()))
    assert jordan_product(X, X) == JordanElement.diag(0, 1, 1)


@settings(max_examples=20, deadline=None)
@given(elements, elements)
def test_jordan_product_commutes(X, Y):
    assert jordan_product(X, Y) == jordan_product(Y, X)


@settings(max_examples=50, deadline=None)
@given(elements)
def test_shift_is_permutation_conjugation(X):
    assert shift(X) == conjugate_by_permutation(X)
    assert shift(X, 3) == X
    assert freudenthal_det(shift(X)) == freudenthal_det(X)


def test_type_blocks_identity():
    vec, spinor, corner = type_blocks(JordanElement.identity(), 1)
    assert vec == ((Octonion.real(1), Octonion()), (Octonion(), Octonion.real(1)))
    assert spinor == (Octonion(), Octonion()) and corner == 1


@settings(max_examples=30, deadline=None)
@given(elements, st.sampled_from([1, 2, 3]))
def test_type_blocks_follow_shift(X, a):
    assert type_blocks(shift(X, a - 1), a) == type_blocks(X, 1)


@settings(max_examples=30, deadline=None)
@given(elements, st.sampled_from([1, 2, 3]))
def test_pure_vector_has_zero_det(X, a):
    keep = set(vector_block_coordinates(a))
    assert len(keep) == 10
    Y = JordanElement.from_coordinates([c if n in keep else 0
                                        for n, c in enumerate(X.coordinates())])
    assert freudenthal_det(Y) == 0
    ((t, y), (_, s)), spinor, corner = type_blocks(Y, a)
    assert spinor == (Octonion(), Octonion()) and corner == 0
    # 2x2 Hermitian determinant of the vector block
    block = t.c[0] * s.c[0] - y.norm2()
    Z = JordanElement.from_coordinates(Y.coordinates()) + shift(JordanElement.diag(0, 0, 1), a - 1)
    assert freudenthal_det(Z) == block


def test_json_round_trip():
    rng = random.Random(3)
    X = JordanElement.from_coordinates([Fraction(rng.randint(-9, 9), rng.randint(1, 7))
                                        for _ in range(27)])
    doc = X.to_json()
    assert set(doc) == {"d", "x1", "x2", "x3"}
    assert all(isinstance(s, str) for s in doc["x2"])
    assert JordanElement.from_json(doc) == X


def test_matrix_round_trip_checks_hermiticity():
    X = JordanElement.from_coordinates(list(range(27)))
    m = X.to_matrix()
    assert JordanElement.from_matrix(m) == X
    m[0][1] = m[0][1] + Octonion.unit("l")
    with pytest.raises(AssertionError):
        def check(a, b):
            assert a == b
        JordanElement.from_matrix(m, check)


def test_wrong_length():
    with pytest.raises(ValueError):
        JordanElement.from_coordinates([0] * 26)
