from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from octoe6 import linalg
from octoe6.structure import get_algebra
from octoe6.subalgebras import (DIRECT_SUMS, STAB, Subspace, ags_labels, bracket_rows,
                                chain_arrows, check_chain_cartans, check_decomposition,
                                check_direct_sum, check_ideal, check_stabilizer, close, commute,
                                induced_octonion_action, is_closed, is_derivation, killing_rank,
                                octonion_checks, plane_to_ags, plane_vector, registry,
                                shift_permutation, signature, tangent_for)
from octoe6.tangent import tangent_of
from octoe6.transforms import GeneratorName, plane_pairs

RECORDS = registry()
NAMES = get_algebra().names


def test_close_examples(alg):
    assert close(alg, Subspace.span(alg, ["A_k", "A_kl", "A_l"])).dim == 3
    g2 = [f"{k}_{q}" for k in "AG" for q in ("i", "j", "k", "kl", "jl", "il", "l")]
    assert close(alg, Subspace.span(alg, g2)).dim == 14
    assert close(alg, Subspace()).dim == 0
    assert close(alg, Subspace.span(alg, ["A_i", "A_j"])).dim == 3


@settings(max_examples=15, deadline=None)
@given(st.lists(st.sampled_from(NAMES), min_size=1, max_size=3))
def test_closure_properties(names):
    alg = get_algebra()
    S = Subspace.span(alg, names)
    C = close(alg, S)
    assert S <= C
    assert is_closed(alg, C)
    assert close(alg, C).same_span(C)


def test_registry_coverage():
    names = {r.name for r in RECORDS}
    assert len(RECORDS) >= 30 and len(names) == len(RECORDS)
    for need in ["f4", "e6", "g2", "su3_C", "su2_H", "sl3H", "sl2H", "sl3C_s", "sl3R_s",
                 "so3R_s", "stabI", "stabII", "stabIII", "stabI_perp", "u_m1", "so81_l",
                 "so9_1", "sl2O_2", "so4_3", "so5_1", "so6_2", "so7_3", "so8"]:
        assert need in names
    assert sum(n.startswith("b") and n[-1] in "+-" for n in names) == 6


@pytest.mark.parametrize("name", [r.name for r in RECORDS])
def test_record(cat, name):
    rep = cat.verify_record(name)
    assert rep.ok, rep.checks


@pytest.mark.parametrize("name,dim,sig", [
    ("f4", 52, (52, 0, 0)), ("sl3H", 35, (21, 0, 14)), ("stabI", 16, (0, 16, 0)),
    ("sl2H", 15, (10, 0, 5)), ("sl3R_s", 8, (3, 0, 5)), ("sl2O_1", 45, (36, 0, 9)),
])
def test_record_examples(cat, name, dim, sig):
    S = cat.algebra(name)
    assert S.dim == dim and signature(cat.alg, S) == sig


def test_inclusion_chain(cat):
    assert cat.algebra("su2_H") <= cat.algebra("su3_C") <= cat.algebra("g2")
    assert not cat.algebra("g2") <= cat.algebra("su3_C")


def test_only_one_so8(cat):
    assert cat.algebra("so8_t2").same_span(cat.algebra("so8"))
    assert cat.algebra("so8_t3").same_span(cat.algebra("so8"))


PASSING = [d for d in DIRECT_SUMS if d[:2] != ("f4", "u_m1")]


@pytest.mark.parametrize("left,right,dim", PASSING, ids=lambda x: str(x))
def test_direct_sums(cat, left, right, dim):
    rep = check_direct_sum(cat.alg, cat.algebra(left), cat.algebra(right), (left, right))
    assert rep.ok and rep.dim == dim, rep


def test_f4_plus_u_minus_one_is_not_a_direct_sum(cat):
    """B2_tz - B3_tz only commutes with the type-1 so(9) inside f4."""
    alg = cat.alg
    f4, u = cat.algebra("f4"), cat.algebra("u_m1")
    rep = check_direct_sum(alg, f4, u, ("f4", "u_m1"))
    assert not rep.commuting and rep.trivial_intersection and not rep.closed
    assert rep.nonzero_brackets == 16
    cent = Subspace(alg.centralizer([alg.vector("B2_tz-B3_tz")]))
    assert cent.dim == 46
    inside = cent.dim + f4.dim - (cent + f4).dim
    assert inside == 36 and cat.algebra("so9_1") <= cent
    assert close(alg, f4 + u).dim == 78


def test_direct_sum_reports_offenders(cat):
    rep = check_direct_sum(cat.alg, cat.algebra("su2C"), cat.algebra("sl2R_s"))
    assert not rep.commuting and rep.offending


def test_ideal(cat):
    alg = cat.alg
    big = cat.algebra("sl2O+stabI")
    assert big.dim == 61
    assert check_ideal(alg, cat.algebra("stabI"), big)
    assert check_ideal(alg, big, big)
    assert not check_ideal(alg, cat.algebra("sl2O_1"), big)
    assert killing_rank(alg, big) < 61


def test_decomposition(cat):
    for c in check_decomposition(cat):
        assert c.ok, c


def test_null_rotations_abelian(cat):
    b = cat.algebra("b2+")
    assert not commute(cat.alg, b, b)
    for e in cat.records["b2+"].generators:
        v = cat.alg.vector(e)
        assert cat.alg.killing(v, v) == 0


@pytest.mark.parametrize("a", [1, 2, 3])
def test_stabilizers(cat, a):
    for c in check_stabilizer(cat, a):
        assert c.ok, c


def test_stabilizer_acts_trivially_on_vectors(cat):
    # finite check in the 27-dim picture: L X has no type-1 vector part
    from octoe6.jordan import vector_block_coordinates
    rows = vector_block_coordinates(1)
    for e in STAB[1]:
        L = tangent_for(cat.alg, e)
        image = L.apply([Fraction(n + 1, 7) for n in range(27)])
        assert not any(image[r] for r in rows)
    L = tangent_for(cat.alg, STAB[2][0])
    assert any(L.num[rows].flat)


def test_shift_permutation_retypes():
    for g in [GeneratorName.parse(n) for n in ("B1_tk", "R1_zl", "T1_j_il", "S1_kl")]:
        for a in (2, 3):
            assert tangent_of(g).conjugated_by_permutation(shift_permutation(a - 1)) == \
                tangent_of(g.retyped(a))


def test_plane_to_ags():
    m, inv = plane_to_ags()
    assert linalg.determinant(m) != 0
    P = plane_pairs()
    labels = ags_labels()
    row_a = dict(zip(P, m[labels.index("A_i")]))
    assert {k: v for k, v in row_a.items() if v} == {(2, 3): 1, (4, 5): -1}
    row_s = m[labels.index("S_i")]
    assert sorted(v for v in row_s if v) == [1, 1, 1]
    n = len(m)
    for i in range(n):
        for j in range(n):
            assert sum(m[i][k] * inv[k][j] for k in range(n)) == (i == j)


def test_plane_vectors_reconstruct_tangents(alg):
    for p, q in [("j", "k"), ("l", "il"), ("jl", "i")]:
        assert alg.tangent(plane_vector(alg, p, q)) == tangent_of(f"T1_{p}_{q}")


def test_octonion_level(alg):
    for c in octonion_checks(alg):
        assert c.ok, c
    D = induced_octonion_action(tangent_for(alg, "A_i"))
    assert D is not None and is_derivation(D)
    assert induced_octonion_action(tangent_for(alg, "S1_i")) is None or \
        not is_derivation(induced_octonion_action(tangent_for(alg, "S1_i")))
    assert induced_octonion_action(tangent_for(alg, "B1_tz")) is None


def test_chain_arrows(cat):
    assert len(chain_arrows()) >= 15
    for c in check_chain_cartans(cat):
        assert c.ok, c


def test_bracket_rows_shape(alg):
    assert bracket_rows(alg, [], [[1] * 78]).shape == (0, 78)
