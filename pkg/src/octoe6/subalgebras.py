"""Subalgebra closure and the catalogue of named subalgebras of sl(3,O).

Subspaces live in the 78-dimensional coordinate space of
:class:`~octoe6.structure.E6Algebra`.  Everything is exact: spans are integer
row-echelon bases and signatures come from congruence diagonalisation of the
restricted Killing form.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from . import linalg
from .jordan import vector_block_coordinates, x_slice
from .octonion import TABLE, UNIT_INDEX, UNIT_NAMES
from .structure import DIM, E6Algebra, U, get_algebra
from .tangent import TangentMap, tangent_of
from .transforms import COMPOSITE_WEIGHTS, composite_planes, plane_pairs

IM_H = ("k", "kl", "l")
TYPES = (1, 2, 3)


class Subspace:
    """A rational subspace of the 78-dimensional algebra."""

    def __init__(self, vectors: Iterable[Sequence] = (), generators: Sequence[str] = ()):
        self.generators = tuple(generators)
        self.echelon = linalg.Echelon(DIM)
        for v in vectors:
            self.echelon.add(v)

    @classmethod
    def span(cls, alg: E6Algebra, exprs: Sequence[str]) -> "Subspace":
        return cls([alg.vector(e) for e in exprs], exprs)

    @property
    def dim(self) -> int:
        return self.echelon.dim

    @property
    def basis(self) -> list[list[int]]:
        return self.echelon.basis()

    def contains(self, v) -> bool:
        return self.echelon.contains(v)

    def __le__(self, other: "Subspace") -> bool:
        return other.echelon.contains_all(self.echelon)

    def same_span(self, other: "Subspace") -> bool:
        return self.dim == other.dim and self <= other

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace(self.basis + other.basis, self.generators + other.generators)

    def __repr__(self):
        return f"Subspace(dim={self.dim})"


def bracket_rows(alg: E6Algebra, left, right) -> np.ndarray:
    """Every bracket ``[l, r]``, scaled by the positive constant ``sc_den``, as rows."""
    if not len(left) or not len(right):
        return np.zeros((0, DIM), dtype=np.int64)
    a = np.array(left, dtype=object)
    b = np.array(right, dtype=object)
    amax = max(abs(int(x)) for x in a.flat)
    bmax = max(abs(int(x)) for x in b.flat)
    c = alg.sc_num
    if amax * bmax * int(np.abs(c).max()) * DIM * DIM < 2 ** 62:
        a, b = a.astype(np.int64), b.astype(np.int64)
    else:
        c = c.astype(object)
    t = np.einsum("ai,ijk->ajk", a, c)
    return np.einsum("ajk,bj->abk", t, b).reshape(-1, DIM)


def close(alg: E6Algebra, S: Subspace) -> Subspace:
    """Smallest bracket-closed subspace containing ``S``."""
    out = Subspace(S.basis, S.generators)
    frontier = out.basis
    while frontier:
        new = []
        for r in bracket_rows(alg, frontier, out.basis):
            if r.any():
                row = out.echelon.insert([int(x) for x in r])
                if row is not None:
                    new.append(row)
        frontier = new
    return out


def is_closed(alg: E6Algebra, S: Subspace) -> bool:
    return all(S.contains(r) for r in bracket_rows(alg, S.basis, S.basis) if r.any())


def commute(alg: E6Algebra, g: Subspace, h: Subspace) -> list[tuple[int, int]]:
    """Index pairs of basis rows of ``g`` and ``h`` whose bracket is nonzero."""
    rows = bracket_rows(alg, g.basis, h.basis)
    nh = max(h.dim, 1)
    return [divmod(n, nh) for n, r in enumerate(rows) if r.any()]


def signature(alg: E6Algebra, S: Subspace) -> tuple[int, int, int]:
    """``(negative, zero, positive)`` inertia of the Killing form restricted to ``S``."""
    if S.dim == 0:
        return (0, 0, 0)
    return linalg.inertia(alg.restricted_killing(S.basis))


def killing_rank(alg: E6Algebra, S: Subspace) -> int:
    neg, _, pos = signature(alg, S)
    return neg + pos


# --- records ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SubalgebraRecord:
    name: str
    generators: tuple
    expected_dim: int
    expected_signature: tuple | None  # (negative, zero, positive)
    label: str = ""
    contains: tuple = ()
    same_as: str | None = None
    note: str = ""
    closed: bool = True  # False for a plain subspace that is not asserted to be a subalgebra


def _planes(a: int, units: Sequence[str]) -> list[str]:
    chosen = {UNIT_INDEX[u] for u in units}
    return [f"T{a}_{UNIT_NAMES[p]}_{UNIT_NAMES[q]}" for p, q in plane_pairs()
            if p in chosen and q in chosen]


def _bpm(a: int, sign: str) -> list[str]:
    """Null rotations spanning ``b^a_+`` or ``b^a_-``."""
    s1, s2 = ("-", "+") if sign == "+" else ("+", "-")
    return [f"B{a}_tx{s1}R{a}_xz"] + [f"B{a}_t{q}{s2}R{a}_z{q}" for q in U]


def _so8(a: int) -> list[str]:
    return ([f"A_{q}" for q in U] + [f"G_{q}" for q in U] + [f"S{a}_{q}" for q in U]
            + [f"R{a}_x{q}" for q in U])


def _so9(a: int) -> list[str]:
    return _so8(1) + [f"R{a}_xz"] + [f"R{a}_z{q}" for q in U]


def _sl2o(a: int) -> list[str]:
    return _so9(a) + [f"B{a}_tz", f"B{a}_tx"] + [f"B{a}_t{q}" for q in U]


SL3H_ROTATIONS = ([f"R{a}_xz" for a in TYPES] + [f"R{a}_z{q}" for a in TYPES for q in IM_H]
                  + [f"R{a}_x{q}" for a in (1, 2) for q in IM_H]
                  + [f"G_{q}-S1_{q}" for q in IM_H])
SL3H_BOOSTS = (["B1_tz", "B2_tz-B3_tz"] + [f"B{a}_tx" for a in TYPES]
               + [f"B{a}_t{q}" for a in TYPES for q in IM_H])
SL2H_ROTATIONS = (["R1_xz"] + [f"R1_z{q}" for q in IM_H] + [f"R1_x{q}" for q in IM_H]
                  + [f"G_{q}-S1_{q}" for q in IM_H])
SL2H_BOOSTS = ["B1_tz", "B1_tx"] + [f"B1_t{q}" for q in IM_H]
SU3C_S = ["R1_xz", "R2_xz", "R3_xz", "R1_xl", "R2_xl", "R1_zl", "R2_zl", "R3_zl"]
SL3C_S_BOOSTS = ["B1_tz", "B2_tz", "B1_tx", "B2_tx", "B3_tx", "B1_tl", "B2_tl", "B3_tl"]
SL3R_S = ["R1_xz", "R2_xz", "R3_xz", "B1_tz", "B2_tz", "B1_tx", "B2_tx", "B3_tx"]
SO81_L = (["B1_tz", "B1_tx"] + [f"B1_t{q}" for q in U if q != "l"] + ["R1_xz"]
          + [f"R1_x{q}" for q in U if q != "l"] + [f"R1_z{q}" for q in U if q != "l"]
          + _planes(1, [q for q in U if q != "l"]))
STAB = {1: _bpm(2, "+") + _bpm(3, "-"), 2: _bpm(3, "+") + _bpm(1, "-"),
        3: _bpm(1, "+") + _bpm(2, "-")}
STAB_NAMES = {1: "stabI", 2: "stabII", 3: "stabIII"}


def registry() -> list[SubalgebraRecord]:
    R = SubalgebraRecord
    recs = [
        R("u1", ("A_l",), 1, (1, 0, 0), "u1", note="Cartan element A_l"),
        R("su2_H", ("A_k", "A_kl", "A_l"), 3, (3, 0, 0), "a1", ("u1",),
          note="su(2)_H = so(3)_H, fixes the preferred quaternions"),
        R("so3_compl", tuple(f"G_{q}+2S1_{q}" for q in IM_H), 3, (3, 0, 0), "a1",
          note="so(3) spanned by G_q + 2 S1_q, q in Im H"),
        R("so4_H", ("A_k", "A_kl", "A_l") + tuple(f"G_{q}-S1_{q}" for q in IM_H), 6, (6, 0, 0),
          "d2", ("su2_H",), note="su(2)_H + <G_q - S1_q>"),
        R("su3_C", tuple(f"A_{q}" for q in U) + ("G_l",), 8, (8, 0, 0), "a2", ("su2_H",),
          note="G2 transformations fixing l"),
        R("g2", tuple(f"A_{q}" for q in U) + tuple(f"G_{q}" for q in U), 14, (14, 0, 0), "g2",
          ("su3_C",)),
    ]
    for a in TYPES:
        recs += [
            R(f"so4_{a}", ("A_k", "A_kl", "A_l") + tuple(f"G_{q}+2S{a}_{q}" for q in IM_H), 6,
              (6, 0, 0), "d2", ("su2_H",), note="rotations of the four units outside H"),
            R(f"so5_{a}", tuple(_planes(a, ["i", "j", "jl", "il", "k"])), 10, (10, 0, 0), "b2",
              (f"so4_{a}",), note="plane rotations among i, j, jl, il, k"),
            R(f"so6_{a}", tuple(_planes(a, [q for q in U if q != "l"])), 15, (15, 0, 0), "d3",
              (f"so5_{a}", "su3_C"), note="plane rotations fixing l"),
            R(f"so7_{a}", tuple(f"A_{q}" for q in U) + tuple(f"G_{q}" for q in U)
              + tuple(f"S{a}_{q}" for q in U), 21, (21, 0, 0), "b3", (f"so6_{a}", "g2")),
        ]
    recs.append(R("so8", tuple(_so8(1)), 28, (28, 0, 0), "d4", ("so7_1", "so7_2", "so7_3")))
    for a in (2, 3):
        recs.append(R(f"so8_t{a}", tuple(_so8(a)), 28, (28, 0, 0), "d4", same_as="so8",
                      note=f"built from type-{a} transformations"))
    for a in TYPES:
        recs += [
            R(f"so9_{a}", tuple(_so9(a)), 36, (36, 0, 0), "b4", ("so8",),
              note=f"su(2,O) of type {a}"),
            R(f"sl2O_{a}", tuple(_sl2o(a)), 45, (36, 0, 9), "d5", (f"so9_{a}",),
              note=f"sl(2,O) = so(9,1) of type {a}"),
        ]
    rotations = [n for n in get_algebra().names if not n.startswith("B")]
    recs += [
        R("f4", tuple(rotations), 52, (52, 0, 0), "f4", ("so9_1", "so9_2", "so9_3", "g2"),
          note="su(3,O)"),
        R("e6", tuple(get_algebra().names), 78, (52, 0, 26), "e6",
          ("f4", "sl2O_1", "sl2O_2", "sl2O_3", "sl3H"), note="sl(3,O)"),
        R("sl3H", tuple(SL3H_ROTATIONS + SL3H_BOOSTS), 35, (21, 0, 14), "a5",
          ("su3H", "sl3C_s", "sl2H")),
        R("su3H", tuple(SL3H_ROTATIONS), 21, (21, 0, 0), "c3", ("su3C_s", "su2H")),
        R("sl2H", tuple(SL2H_ROTATIONS + SL2H_BOOSTS), 15, (10, 0, 5), "d3",
          ("su2H", "sl2C")),
        R("su2H", tuple(SL2H_ROTATIONS), 10, (10, 0, 0), "b2", ("su2C",)),
        R("sl3C_s", tuple(SU3C_S + SL3C_S_BOOSTS), 16, (8, 0, 8), "a2+a2",
          ("su3C_s", "sl3R_s", "sl2C")),
        R("su3C_s", tuple(SU3C_S), 8, (8, 0, 0), "a2", ("so3R_s", "su2C")),
        R("sl2C", ("R1_xz", "R1_xl", "R1_zl", "B1_tz", "B1_tx", "B1_tl"), 6, (3, 0, 3),
          "a1+a1", ("su2C", "sl2R_s")),
        R("su2C", ("R1_xz", "R1_xl", "R1_zl"), 3, (3, 0, 0), "a1"),
        R("sl3R_s", tuple(SL3R_S), 8, (3, 0, 5), "a2", ("so3R_s", "sl2R_s")),
        R("so3R_s", ("R1_xz", "R2_xz", "R3_xz"), 3, (3, 0, 0), "a1"),
        R("sl2R_s", ("R1_xz", "B1_tz", "B1_tx"), 3, (1, 0, 2), "a1", note="so(2,1)_s"),
        R("u_m1", ("B2_tz-B3_tz",), 1, (0, 0, 1), "d1", note="u(-1)"),
        R("boost_cartan", ("B1_tz", "B2_tz-B3_tz"), 2, (0, 0, 2), "d1+d1"),
        R("so81_l", tuple(SO81_L), 36, (28, 0, 8), "b4", ("so6_1",),
          note="type-1 so(8,1) fixing l"),
    ]
    for a in TYPES:
        for s in "+-":
            recs.append(R(f"b{a}{s}", tuple(_bpm(a, s)), 8, (0, 8, 0), "abelian",
                          note=f"null rotations b^{a}_{s}"))
    for a in TYPES:
        p, m = {1: ("b2+", "b3-"), 2: ("b3+", "b1-"), 3: ("b1+", "b2-")}[a]
        recs.append(R(STAB_NAMES[a], tuple(STAB[a]), 16, (0, 16, 0), "abelian", (p, m)))
    recs += [
        R("stabI_perp", tuple(_bpm(2, "-") + _bpm(3, "+")), 16, None, "",
          ("b2-", "b3+"), closed=False, note="b^2_- + b^3_+, a complement of stab(I)"),
        R("sl2O+stabI", tuple(_sl2o(1) + STAB[1]), 61, None, "not semisimple",
          ("sl2O_1", "stabI")),
        R("su2_H+stabI", ("A_k", "A_kl", "A_l") + tuple(STAB[1]), 19, None, "",
          ("su2_H", "stabI")),
        R("su3_C+stabI", tuple(f"A_{q}" for q in U) + ("G_l",) + tuple(STAB[1]), 24, None, "",
          ("su3_C", "stabI")),
        R("so9+stabI", tuple(_so9(1) + STAB[1]), 52, None, "", ("so9_1", "stabI"),
          note="su(2,O) + stab(I), fixes type-1 t"),
        R("so81_l+stabI", tuple(SO81_L + STAB[1]), 52, None, "", ("so81_l", "stabI")),
    ]
    return recs


def registry_by_name() -> dict[str, SubalgebraRecord]:
    return {r.name: r for r in registry()}


@dataclass
class RecordReport:
    name: str
    span_dim: int
    dim: int
    expected_dim: int
    signature: tuple
    expected_signature: tuple | None
    closed_as_given: bool
    inclusions: dict = field(default_factory=dict)
    same_as: bool | None = None

    @property
    def checks(self) -> dict[str, bool]:
        out = {"dim": self.dim == self.expected_dim}
        if self.expected_signature is not None:
            out["signature"] = tuple(self.signature) == tuple(self.expected_signature)
        for other, ok in self.inclusions.items():
            out[f"contains {other}"] = ok
        if self.same_as is not None:
            out["same span"] = self.same_as
        return out

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


class Catalogue:
    """Lazily evaluated spans and closures of every registry record."""

    def __init__(self, alg: E6Algebra | None = None):
        self.alg = alg or get_algebra()
        self.records = registry_by_name()
        self._span: dict[str, Subspace] = {}
        self._closure: dict[str, Subspace] = {}

    def span(self, name: str) -> Subspace:
        if name not in self._span:
            self._span[name] = Subspace.span(self.alg, self.records[name].generators)
        return self._span[name]

    def algebra(self, name: str) -> Subspace:
        if name == "zero":
            return Subspace()
        rec = self.records[name]
        if not rec.closed:
            return self.span(name)
        if name not in self._closure:
            self._closure[name] = close(self.alg, self.span(name))
        return self._closure[name]

    def verify_record(self, name: str) -> RecordReport:
        rec = self.records[name]
        span, full = self.span(name), self.algebra(name)
        rep = RecordReport(
            name=name, span_dim=span.dim, dim=full.dim, expected_dim=rec.expected_dim,
            signature=signature(self.alg, full), expected_signature=rec.expected_signature,
            closed_as_given=span.dim == full.dim,
        )
        for other in rec.contains:
            rep.inclusions[other] = self.algebra(other) <= full
        if rec.same_as:
            rep.same_as = full.same_span(self.algebra(rec.same_as))
        return rep


def verify_record(name: str, cat: Catalogue | None = None) -> RecordReport:
    return (cat or Catalogue()).verify_record(name)


# --- direct sums, ideals, decomposition -------------------------------------------------

@dataclass
class DirectSumReport:
    left: str
    right: str
    commuting: bool
    trivial_intersection: bool
    closed: bool
    dim: int
    offending: list  # first few (row of g, row of h) index pairs with nonzero bracket
    nonzero_brackets: int = 0

    @property
    def ok(self) -> bool:
        return self.commuting and self.trivial_intersection and self.closed


def check_direct_sum(alg: E6Algebra, g: Subspace, h: Subspace, names=("g", "h")) -> DirectSumReport:
    bad = commute(alg, g, h)
    total = g + h
    return DirectSumReport(
        left=names[0], right=names[1], commuting=not bad,
        trivial_intersection=total.dim == g.dim + h.dim,
        closed=is_closed(alg, total), dim=total.dim, offending=bad[:10],
        nonzero_brackets=len(bad),
    )


# (g, g', expected dimension of g + g'); "zero" is the zero algebra
DIRECT_SUMS = [
    ("sl2O_1", "u_m1", 46), ("so9_1", "u_m1", 37), ("so7_1", "boost_cartan", 23),
    ("g2", "sl3R_s", 22), ("su3_C", "sl3C_s", 24), ("su2_H", "sl3H", 38),
    ("e6", "zero", 78), ("su2_H", "sl2H", 18), ("sl2C", "so6_1", 21),
    ("su3_C", "su3C_s", 16), ("su2_H", "su3H", 24), ("f4", "u_m1", 53),
    ("su2C", "so6_1", 18), ("su2_H", "su2H", 13),
]


def check_ideal(alg: E6Algebra, h: Subspace, g: Subspace) -> bool:
    """True iff ``[g, h]`` lies in ``h``."""
    return all(h.contains(r) for r in bracket_rows(alg, g.basis, h.basis) if r.any())


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


def check_decomposition(cat: Catalogue) -> list[Check]:
    alg = cat.alg
    out = []
    pieces = ["sl2O_1", "stabI", "stabI_perp", "u_m1"]
    dims = [cat.algebra(p).dim for p in pieces]
    out.append(Check("piece dims 45+16+16+1", dims == [45, 16, 16, 1], str(dims)))
    total = Subspace()
    for p in pieces:
        total = total + cat.algebra(p)
    out.append(Check("direct sum has rank 78", total.dim == 78, str(total.dim)))
    out.append(Check("stab(I)^perp = b2- + b3+",
                     cat.algebra("stabI_perp").same_span(cat.span("b2-") + cat.span("b3+"))))
    for a in TYPES:
        for s in "+-":
            name = f"b{a}{s}"
            sub = cat.algebra(name)
            vecs = [alg.vector(e) for e in cat.records[name].generators]
            out.append(Check(f"{name} closed dim 8", cat.span(name).dim == 8 and sub.dim == 8))
            out.append(Check(f"{name} abelian", not commute(alg, sub, sub)))
            out.append(Check(f"{name} basis Killing-null",
                             all(alg.killing(v, v) == 0 for v in vecs)))
            out.append(Check(f"{name} Killing identically zero",
                             signature(alg, sub) == (0, 8, 0)))
    stab = cat.algebra("stabI")
    out.append(Check("stab(I) Killing identically zero", signature(alg, stab) == (0, 16, 0)))
    big = cat.algebra("sl2O+stabI")
    out.append(Check("sl2O+stabI dim 61", big.dim == 61, str(big.dim)))
    out.append(Check("stab(I) ideal of sl2O+stabI", check_ideal(alg, stab, big)))
    rk = killing_rank(alg, big)
    out.append(Check("sl2O+stabI Killing degenerate", rk < 61, f"rank {rk}"))
    return out


def check_stabilizer(cat: Catalogue, a: int) -> list[Check]:
    alg = cat.alg
    out = []
    rows = vector_block_coordinates(a)
    gens = STAB[a]
    zero_rows = all(not tangent_for(alg, e).num[rows].any() for e in gens)
    out.append(Check(f"{STAB_NAMES[a]} leaves the type-{a} vector block fixed", zero_rows))
    sub = cat.algebra(STAB_NAMES[a])
    out.append(Check(f"{STAB_NAMES[a]} dim 16", sub.dim == 16, str(sub.dim)))
    if a > 1:
        shifted = Subspace([alg.coords(tangent_for(alg, e).conjugated_by_permutation(
            shift_permutation(a - 1))) for e in STAB[1]])
        out.append(Check(f"{STAB_NAMES[a]} is the type shift of stabI", shifted.same_span(sub)))
    if a == 1:
        for name, dim in (("su2_H+stabI", 19), ("su3_C+stabI", 24), ("so9+stabI", 52),
                          ("so81_l+stabI", 52)):
            d = cat.algebra(name).dim
            out.append(Check(f"{name} closes with dim {dim}", d == dim, str(d)))
    return out


def tangent_for(alg: E6Algebra, expr: str) -> TangentMap:
    return alg.tangent(alg.vector(expr))


def shift_permutation(power: int = 1) -> list[int]:
    """Coord27 permutation ``new -> old`` realising ``X -> T X T^dagger`` ``power`` times."""
    perm = list(range(27))
    for _ in range(power % 3):
        d = [perm[2], perm[0], perm[1]]
        xs = [perm[x_slice(n)] for n in range(3)]
        perm = d + xs[2] + xs[0] + xs[1]
    return perm


# --- plane basis versus A/G/S --------------------------------------------------------------

def plane_to_ags() -> tuple[list[list[Fraction]], list[list[Fraction]]]:
    """Matrix taking plane rotations to ``(A_q, G_q, S_q)`` and its inverse.

    Rows are ordered A over the 7 units, then G, then S; columns follow
    :func:`~octoe6.transforms.plane_pairs`.
    """
    planes = plane_pairs()
    col = {pq: n for n, pq in enumerate(planes)}
    m = []
    for kind in "AGS":
        for q in range(1, 8):
            row = [Fraction(0)] * 21
            for pq, w in zip(composite_planes(q), COMPOSITE_WEIGHTS[kind]):
                row[col[pq]] += w
            m.append(row)
    return m, linalg.inverse(m)


def ags_labels() -> list[str]:
    return [f"{k}_{UNIT_NAMES[q]}" for k in "AGS" for q in range(1, 8)]


def plane_vector(alg: E6Algebra, p: str, q: str) -> list[Fraction]:
    """78-coordinates of the type-1 plane rotation via the inverse A/G/S change of basis."""
    planes = plane_pairs()
    pq = (UNIT_INDEX[p], UNIT_INDEX[q])
    sign = 1
    if pq not in planes:
        pq, sign = (pq[1], pq[0]), -1
    _, inv = plane_to_ags()
    row = inv[planes.index(pq)]
    out = [Fraction(0)] * DIM
    for c, label in zip(row, ags_labels()):
        kind, unit = label.split("_")
        name = f"S1_{unit}" if kind == "S" else label
        out = [x + sign * c * y for x, y in zip(out, alg.vector(name))]
    return out


# --- octonion-level checks ----------------------------------------------------------------

def induced_octonion_action(L: TangentMap) -> list[list[Fraction]] | None:
    """The common 8x8 block by which ``L`` acts on each off-diagonal entry, if it has one."""
    m = L.m
    blocks = [m[x_slice(n), x_slice(n)] for n in range(3)]
    if not all((b == blocks[0]).all() for b in blocks):
        return None
    mask = np.ones((27, 27), dtype=bool)
    for n in range(3):
        mask[x_slice(n), x_slice(n)] = False
    if L.num[mask].any():
        return None
    return [[blocks[0][r, c] for c in range(8)] for r in range(8)]


def is_derivation(D: list[list[Fraction]]) -> bool:
    """``D(e_a e_b) = D(e_a) e_b + e_a D(e_b)`` on all basis pairs."""
    def dcol(n):
        return [D[r][n] for r in range(8)]

    def mul(u, v):
        out = [Fraction(0)] * 8
        for a in range(8):
            if u[a]:
                for b in range(8):
                    if v[b]:
                        s, c = TABLE[a][b]
                        out[c] += s * u[a] * v[b]
        return out

    for a, b in itertools.product(range(8), repeat=2):
        s, c = TABLE[a][b]
        lhs = [s * x for x in dcol(c)]
        ea = [Fraction(int(n == a)) for n in range(8)]
        eb = [Fraction(int(n == b)) for n in range(8)]
        rhs = [x + y for x, y in zip(mul(dcol(a), eb), mul(ea, dcol(b)))]
        if lhs != rhs:
            return False
    return True


def octonion_checks(alg: E6Algebra) -> list[Check]:
    out = []
    g2 = [f"A_{q}" for q in U] + [f"G_{q}" for q in U]
    acts = {e: induced_octonion_action(tangent_for(alg, e)) for e in g2}
    out.append(Check("g2 acts entrywise by one 8x8 block", all(v is not None for v in acts.values())))
    out.append(Check("g2 elements are octonion derivations",
                     all(v is not None and is_derivation(v) for v in acts.values())))
    l_col = UNIT_INDEX["l"]
    su3 = [f"A_{q}" for q in U] + ["G_l"]
    out.append(Check("su(3)_C annihilates l",
                     all(acts[e] is not None and not any(acts[e][r][l_col] for r in range(8))
                         for e in su3)))
    return out


# --- chain Cartan annotations --------------------------------------------------------------

def chain_arrows() -> list[tuple[str, str, str]]:
    """``(smaller, larger, element)``: the element is in the larger algebra only."""
    arrows = [("zero", "u1", "A_l"), ("su2_H", "su3_C", "G_l"), ("f4", "e6", "B1_tz"),
              ("f4", "e6", "B2_tz")]
    for a in TYPES:
        arrows += [
            ("su2_H", f"so4_{a}", f"G_l+2S{a}_l"),
            (f"so5_{a}", f"so6_{a}", f"G_l-S{a}_l"),
            ("g2", f"so7_{a}", f"S{a}_l"),
            (f"so7_{a}", "so8", "R1_xl"),
            (f"so9_{a}", f"sl2O_{a}", f"B{a}_tz"),
        ]
    arrows += [("sl2O_1", "e6", "B2_tz"), ("sl2O_2", "e6", "B1_tz"), ("sl2O_3", "e6", "B2_tz")]
    return arrows


def check_chain_cartans(cat: Catalogue) -> list[Check]:
    out = []
    for small, large, elem in chain_arrows():
        v = cat.alg.vector(elem)
        in_small = cat.algebra(small).contains(v)
        in_large = cat.algebra(large).contains(v)
        out.append(Check(f"{elem}: in {large}, not in {small}", in_large and not in_small))
    so4 = cat.algebra("so4_H")
    su2 = cat.algebra("su2_H")
    other = close(cat.alg, Subspace.span(cat.alg, [f"G_{q}-S1_{q}" for q in IM_H]))
    out.append(Check("so4_H = su(2)_H + so(3), commuting 3+3",
                     other.dim == 3 and check_direct_sum(cat.alg, su2, other).ok
                     and (su2 + other).same_span(so4)))
    return out
