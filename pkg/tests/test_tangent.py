import itertools
import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from octoe6.jordan import JordanElement
from octoe6.tangent import (TangentMap, annihilates_trace, curve_commutator,
                            curve_commutator_composed, curve_first_jet, det_derivative,
                            is_one_parameter, jet_matrices, matrix_commutator, proportionality,
                            tangent_of)
from octoe6.transforms import all_generators, apply, elementary_generators

ELEM = elementary_generators()


def numeric_tangent(name, h=1e-5):
    """Central-difference oracle for the tangent matrix."""
    cols = []
    for k in range(27):
        E = JordanElement.basis(k)
        E = JordanElement.from_coordinates([float(c) for c in E.coordinates()])
        plus = apply(name, h, E).coordinates()
        minus = apply(name, -h, E).coordinates()
        cols.append([(a - b) / (2 * h) for a, b in zip(plus, minus)])
    return np.array(cols).T


@pytest.mark.parametrize("name", ["B1_tz", "B2_tkl", "R3_xz", "R1_zl", "T2_jl_il", "A1_k",
                                  "G3_i", "S2_l", "R2_xj"])
def test_tangent_matches_finite_difference(name):
    L = tangent_of(name)
    assert np.allclose(L.m.astype(float), numeric_tangent(name), atol=1e-7)


def test_boost_tz_on_first_diagonal():
    L = tangent_of("B1_tz")
    image = L.apply([1] + [0] * 26)
    assert image[0] == 1 and not any(image[1:])


def test_linear_at_zero():
    assert not any(tangent_of("R2_zk").apply([0] * 27))


def test_composite_tangent_is_sum():
    lhs = tangent_of("A1_i")
    assert lhs == tangent_of("T1_j_k") - tangent_of("T1_kl_jl")
    assert tangent_of("S1_i") == (tangent_of("T1_j_k") + tangent_of("T1_kl_jl")
                                  + tangent_of("T1_l_il"))


def test_commutator_basics():
    L = tangent_of("B1_tz")
    assert matrix_commutator(L, L).is_zero()
    assert matrix_commutator(tangent_of("A1_l"), tangent_of("G1_l")).is_zero()
    assert not matrix_commutator(L, tangent_of("R1_xz")).is_zero()


def test_boost_rotation_bracket_is_boost():
    # [B1_tz, R1_xz] is a multiple of B1_tx
    c = matrix_commutator(tangent_of("B1_tz"), tangent_of("R1_xz"))
    k = proportionality(c, tangent_of("B1_tx"))
    assert k is not None and k != 0


def test_integer_normal_form():
    L = tangent_of("T1_j_k")
    assert math.gcd(math.gcd(*map(int, L.num.flat)), L.den) == 1
    with pytest.raises(ValueError):
        L.num[0, 0] = 5


def test_tangent_map_arithmetic():
    a, b = tangent_of("R1_xz"), tangent_of("B1_tx")
    s = a + b * Fraction(1, 3)
    assert s - a == b * Fraction(1, 3)
    assert (-a) + a == TangentMap.zero()
    assert hash(a * 2) == hash(a + a)


@pytest.mark.parametrize("g", all_generators()[::5], ids=str)
def test_rotations_kill_trace(g):
    assert annihilates_trace(tangent_of(g)) is g.is_rotation


@settings(max_examples=15, deadline=None)
@given(st.sampled_from(all_generators()), st.integers(0, 10 ** 6))
def test_infinitesimal_det_preservation(g, seed):
    rng = random.Random(seed)
    X = JordanElement.from_coordinates([Fraction(rng.randint(-5, 5), rng.randint(1, 5))
                                        for _ in range(27)])
    assert det_derivative(tangent_of(g), X) == 0


def test_det_derivative_nonzero_off_algebra():
    # the identity map scales det by 3: d/de det((1+e)X) = 3 det X
    one = TangentMap(np.eye(27, dtype=np.int64), 1)
    X = JordanElement.diag(Fraction(2), Fraction(3), Fraction(5))
    assert det_derivative(one, X) == 90


def test_curve_of_self_is_zero():
    assert curve_commutator("R1_xz", "R1_xz").is_zero()


def test_first_jet_of_curve_vanishes():
    assert curve_first_jet("B1_tz", "B1_tx").is_zero()
    assert curve_first_jet("T1_j_k", "R2_zl").is_zero()


def test_kappa_is_one_quarter():
    a, b = "B1_tz", "B1_tx"
    cc = curve_commutator(a, b)
    mc = matrix_commutator(tangent_of(a), tangent_of(b))
    assert proportionality(cc, mc) == Fraction(1, 4)


@pytest.mark.parametrize("pair", random.Random(11).sample(list(itertools.combinations(ELEM, 2)), 12),
                         ids=lambda p: f"{p[0]}-{p[1]}")
def test_literal_and_composed_curves_agree(pair):
    a, b = pair
    lit = curve_commutator(a, b)
    assert lit == curve_commutator_composed(a, b)
    assert lit == matrix_commutator(tangent_of(a), tangent_of(b)) * Fraction(1, 4)


@pytest.mark.parametrize("g", ELEM[::6], ids=str)
def test_elementary_are_one_parameter(g):
    assert is_one_parameter(g)


def test_second_jet_of_boost():
    # B1_tz: d1 -> e^a d1, so the second derivative is d1 -> d1
    _, second = jet_matrices(all_generators()[0])
    assert second.apply([1] + [0] * 26)[0] == 1


def test_conjugation_by_permutation_identity():
    L = tangent_of("R2_zl")
    assert L.conjugated_by_permutation(list(range(27))) == L
