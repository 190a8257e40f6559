import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from octoe6.octonion import (IMAGINARY, QUATERNIONIC_PAIRS, TABLE, UNIT_INDEX, UNIT_NAMES,
                             Octonion, associator, format_table, oct_conj, oct_mul, oct_norm2,
                             oct_real, quaternionic_triples, subalgebra_membership)

coef = st.fractions(min_value=-5, max_value=5, max_denominator=6)
octs = st.lists(coef, min_size=8, max_size=8).map(Octonion)


def u(name):
    return Octonion.unit(name)


@pytest.mark.parametrize("p,q,r", [("i", "j", "k"), ("il", "i", "l"), ("k", "l", "kl")])
def test_listed_products(p, q, r):
    assert oct_mul(u(p), u(q)) == u(r)


def test_every_listed_pair():
    for r, pairs in QUATERNIONIC_PAIRS.items():
        for p, q in pairs:
            assert oct_mul(u(p), u(q)) == u(r), (p, q, r)
            # cyclic: q r = p, r p = q
            assert oct_mul(u(q), u(r)) == u(p)
            assert oct_mul(u(r), u(p)) == u(q)


def test_seven_lines_each_three_times():
    lines = {frozenset(t) for t in quaternionic_triples()}
    assert len(lines) == 7
    for a, b in itertools.combinations(IMAGINARY, 2):
        assert sum({a, b} <= line for line in lines) == 1


def test_table_shape():
    for a in range(8):
        cols = sorted(TABLE[a][b][1] for b in range(8))
        assert cols == list(range(8))  # signed permutation rows
    for q in IMAGINARY:
        assert TABLE[q][q] == (-1, 0)
        assert TABLE[0][q] == (1, q) == TABLE[q][0]
    for a, b in itertools.combinations(IMAGINARY, 2):
        s, c = TABLE[a][b]
        assert TABLE[b][a] == (-s, c)


def test_conj_norm_real():
    assert oct_conj(u("i")) == -u("i")
    assert oct_norm2(u("i") + u("l")) == 2
    assert oct_real(oct_mul(u("il"), u("i"))) == 0
    assert oct_mul(Octonion.real(1), u("jl")) == u("jl")


def test_associator_examples():
    assert not associator(u("i"), u("j"), u("k"))
    assert associator(u("i"), u("j"), u("l"))


def test_alternative_on_basis():
    units = [Octonion.unit(n) for n in UNIT_NAMES]
    for a, b in itertools.product(units, repeat=2):
        assert not associator(a, a, b)
        assert not associator(a, b, b)


@settings(max_examples=60, deadline=None)
@given(octs, octs)
def test_alternativity(a, b):
    assert not associator(a, b, a)
    assert not associator(a, a, b)


@settings(max_examples=60, deadline=None)
@given(octs, octs)
def test_composition(a, b):
    assert oct_norm2(oct_mul(a, b)) == oct_norm2(a) * oct_norm2(b)


@settings(max_examples=40, deadline=None)
@given(octs, octs, octs)
def test_moufang(a, b, c):
    # (ab)(ca) = a((bc)a)
    lhs = oct_mul(oct_mul(a, b), oct_mul(c, a))
    rhs = oct_mul(a, oct_mul(oct_mul(b, c), a))
    assert lhs == rhs


@given(octs)
def test_norm_is_a_times_conj(a):
    prod = oct_mul(a, oct_conj(a))
    assert prod == Octonion.real(oct_norm2(a))


@pytest.mark.parametrize("x,which,expected", [
    (u("k") + u("l"), "H", True), (u("i"), "H", False), (Octonion.real(1), "R", True),
    (u("l"), "C", True), (u("k"), "C", False),
])
def test_membership(x, which, expected):
    assert subalgebra_membership(x, which) is expected


@pytest.mark.parametrize("which,names", [("H", ("k", "kl", "l")), ("C", ("l",))])
def test_preferred_subalgebras_close(which, names):
    span = [Octonion.real(1)] + [u(n) for n in names]
    for a, b in itertools.product(span, repeat=2):
        assert subalgebra_membership(oct_mul(a, b), which)


def test_format_table_rows():
    text = format_table().splitlines()
    assert len(text) == 9
    row_i = text[1 + UNIT_INDEX["i"]].split()
    assert row_i[0] == "i" and row_i[1 + UNIT_INDEX["j"]] == "k"


def test_rejects_wrong_length():
    with pytest.raises(ValueError):
        Octonion([1, 2, 3])
