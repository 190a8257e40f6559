"""The 78-element basis of sl(3,O), its structure constants and Killing form.

Tangent maps are computed once as 27x27 matrices; everything after that
(brackets, Killing form, Jacobi checks, closures) happens in the 78-dimensional
adjoint picture with integer arrays over a common denominator.
"""

from __future__ import annotations

import csv
import io
import json
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Sequence

import numpy as np

from . import linalg
from .octonion import IMAGINARY, UNIT_NAMES
from .scalars import format_rational, parse_rational
from .tangent import TangentMap, matrix_commutator, tangent_of
from .transforms import GeneratorName, all_generators

DIM = 78
U = [UNIT_NAMES[q] for q in IMAGINARY]


@dataclass(frozen=True)
class BasisElement:
    index: int
    name: str
    recipe: tuple  # ((generator label, Fraction), ...)
    tangent: TangentMap
    compact: bool


def basis_recipes() -> list[tuple[str, tuple]]:
    """Names and defining combinations of the 78 basis elements, in export order."""
    one = Fraction(1)
    out = []
    out += [(f"A_{q}", ((f"A1_{q}", one),)) for q in U]
    out += [(f"G_{q}", ((f"G1_{q}", one),)) for q in U]
    out += [(f"S1_{q}", ((f"S1_{q}", one),)) for q in U]
    out += [(f"R1_x{q}", ((f"R1_x{q}", one),)) for q in U]
    out += [(f"R{a}_xz", ((f"R{a}_xz", one),)) for a in (1, 2, 3)]
    out += [(f"R{a}_z{q}", ((f"R{a}_z{q}", one),)) for a in (1, 2, 3) for q in U]
    out += [(f"B{a}_tx", ((f"B{a}_tx", one),)) for a in (1, 2, 3)]
    out += [(f"B{a}_t{q}", ((f"B{a}_t{q}", one),)) for a in (1, 2, 3) for q in U]
    out.append(("B1_tz", (("B1_tz", one),)))
    out.append(("B2_tz-B3_tz", (("B2_tz", one), ("B3_tz", -one))))
    return out


def _tangent_of_recipe(recipe) -> TangentMap:
    total = TangentMap.zero()
    for label, c in recipe:
        total = total + tangent_of(label) * c
    return total


# --- staged reduction -------------------------------------------------------------

def dependency_identities() -> dict[str, tuple]:
    """Exact linear relations among tangent maps: label -> ((generator, coeff), ...)."""
    h = Fraction(1, 2)
    rels = {}
    for q in U:
        rels[f"A1_{q} = A2_{q}"] = ((f"A1_{q}", 1), (f"A2_{q}", -1))
        rels[f"A1_{q} = A3_{q}"] = ((f"A1_{q}", 1), (f"A3_{q}", -1))
        rels[f"G1_{q} = G2_{q}"] = ((f"G1_{q}", 1), (f"G2_{q}", -1))
        rels[f"G1_{q} = G3_{q}"] = ((f"G1_{q}", 1), (f"G3_{q}", -1))
        rels[f"S1_{q} + S2_{q} + S3_{q} = 0"] = ((f"S1_{q}", 1), (f"S2_{q}", 1), (f"S3_{q}", 1))
        rels[f"R1_x{q} + R2_x{q} + R3_x{q} = 0"] = (
            (f"R1_x{q}", 1), (f"R2_x{q}", 1), (f"R3_x{q}", 1))
        rels[f"R2_x{q} = -R1_x{q}/2 - S1_{q}/2"] = (
            (f"R2_x{q}", 1), (f"R1_x{q}", h), (f"S1_{q}", h))
        rels[f"S2_{q} = 3R1_x{q}/2 - S1_{q}/2"] = (
            (f"S2_{q}", 1), (f"R1_x{q}", -3 * h), (f"S1_{q}", h))
        rels[f"S1_{q} = R3_x{q} - R2_x{q}"] = (
            (f"S1_{q}", 1), (f"R3_x{q}", -1), (f"R2_x{q}", 1))
    rels["B1_tz + B2_tz + B3_tz = 0"] = (("B1_tz", 1), ("B2_tz", 1), ("B3_tz", 1))
    return rels


def check_dependencies() -> dict[str, bool]:
    return {label: _tangent_of_recipe(tuple((g, Fraction(c)) for g, c in rel)).is_zero()
            for label, rel in dependency_identities().items()}


def reduction_stages() -> dict[str, list[str]]:
    """Generator labels kept after each elimination step (135, 100, 79, 78 elements)."""
    full = [g.label for g in all_generators()]
    drop1 = {f"{k}{a}_{q}" for k in "AG" for a in (2, 3) for q in U} | {f"S3_{q}" for q in U}
    stage1 = [g for g in full if g not in drop1]
    drop2 = {f"R{a}_x{q}" for a in (2, 3) for q in U} | {f"S2_{q}" for q in U}
    stage2 = [g for g in stage1 if g not in drop2]
    stage3 = [g for g in stage2 if g not in ("B2_tz", "B3_tz")] + ["B2_tz-B3_tz"]
    return {"135": full, "100": stage1, "79": stage2, "78": stage3}


def stage_rank(labels: Sequence[str]) -> int:
    rows = []
    for label in labels:
        t = _tangent_of_recipe(_parse_combination(label))
        rows.append([int(x) for x in t.flat()])
    return linalg.rank(rows)


_TERM = re.compile(r"\s*([+-]?)\s*((?:\d+(?:/\d+)?)?)\s*\*?\s*([A-Z][0-9]?_[A-Za-z_]+)")


def _parse_combination(text: str) -> tuple:
    """``"G_l+2S2_l"`` -> ``(("G_l", 1), ("S2_l", 2))``; also ``"1/2*A_i"``."""
    pos, terms = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse combination {text!r} at {text[pos:]!r}")
        sign, coeff, name = m.groups()
        c = Fraction(coeff) if coeff else Fraction(1)
        terms.append((name, -c if sign == "-" else c))
        pos = m.end()
    if not terms:
        raise ValueError("empty combination")
    return tuple(terms)


# --- the algebra ---------------------------------------------------------------------

class E6Algebra:
    """Basis, structure constants and Killing form of sl(3,O)."""

    def __init__(self):
        recipes = basis_recipes()
        self.basis: list[BasisElement] = []
        for n, (name, recipe) in enumerate(recipes):
            t = _tangent_of_recipe(recipe)
            compact = not name.startswith("B")
            self.basis.append(BasisElement(n, name, recipe, t, compact))
        self.names = [b.name for b in self.basis]
        self.index = {name: n for n, name in enumerate(self.names)}
        den = reduce(lambda a, b: a * b // math.gcd(a, b), (b.tangent.den for b in self.basis), 1)
        self.tangent_den = den
        self.tangent_nums = np.stack(
            [b.tangent.flat() * (den // b.tangent.den) for b in self.basis])
        self.solver = linalg.SpanSolver(self.tangent_nums)
        self._build_structure_constants()

    # coordinates -------------------------------------------------------------------
    def coords(self, t: TangentMap) -> list[Fraction]:
        """Exact coordinates of a tangent map in the 78-basis (raises NotInSpan)."""
        c = self.solver.solve(t.flat(), t.den)
        return [x * self.tangent_den for x in c]

    def tangent(self, vec: Sequence) -> TangentMap:
        total = TangentMap.zero()
        for c, b in zip(vec, self.basis):
            if c:
                total = total + b.tangent * Fraction(c)
        return total

    def vector(self, expr: str) -> list[Fraction]:
        """78-coordinates of a named element or rational combination of names."""
        out = [Fraction(0)] * DIM
        for name, c in _parse_combination(expr):
            v = self._named_vector(name)
            out = [a + c * b for a, b in zip(out, v)]
        return out

    @lru_cache(maxsize=None)
    def _named_vector(self, name: str) -> tuple:
        if name in self.index:
            v = [Fraction(0)] * DIM
            v[self.index[name]] = Fraction(1)
            return tuple(v)
        m = re.fullmatch(r"([AG])_(\w+)", name)
        label = f"{m.group(1)}1_{m.group(2)}" if m else name
        return tuple(self.coords(tangent_of(GeneratorName.parse(label))))

    # structure constants -------------------------------------------------------------
    def _build_structure_constants(self):
        pairs = [(i, j) for i in range(DIM) for j in range(i + 1, DIM)]
        nums = np.empty((len(pairs), 27 * 27), dtype=np.int64)
        dens = []
        for n, (i, j) in enumerate(pairs):
            c = matrix_commutator(self.basis[i].tangent, self.basis[j].tangent)
            nums[n] = c.flat()
            dens.append(c.den)
        common = reduce(lambda a, b: a * b // math.gcd(a, b), dens, 1)
        scale = np.array([common // d for d in dens], dtype=np.int64)[:, None]
        coeff, cden = self.solver.solve_many(nums * scale, common)
        # coords in the basis are coeff / cden * tangent_den
        coeff = coeff * self.tangent_den
        g = reduce(math.gcd, (int(x) for x in coeff.flat), cden)
        self.sc_den = cden // g
        table = np.zeros((DIM, DIM, DIM), dtype=np.int64)
        for n, (i, j) in enumerate(pairs):
            row = np.array([int(x) // g for x in coeff[n]], dtype=np.int64)
            table[i, j] = row
            table[j, i] = -row
        table.setflags(write=False)
        self.sc_num = table

    def structure_constant(self, i: int, j: int, k: int) -> Fraction:
        return Fraction(int(self.sc_num[i, j, k]), self.sc_den)

    def bracket(self, u: Sequence, v: Sequence) -> list[Fraction]:
        """Bracket of two 78-vectors with rational entries."""
        du, dv = _common_den(u), _common_den(v)
        un = np.array([int(x * du) for x in u], dtype=object)
        vn = np.array([int(x * dv) for x in v], dtype=object)
        out = np.einsum("i,j,ijk->k", un, vn, self.sc_num.astype(object))
        d = du * dv * self.sc_den
        return [Fraction(int(x), d) for x in out]

    def bracket_basis(self, i: int, j: int) -> list[Fraction]:
        return [Fraction(int(x), self.sc_den) for x in self.sc_num[i, j]]

    def ad(self, i: int) -> np.ndarray:
        """Integer matrix of ``ad_{e_i}`` (numerators over ``sc_den``): column j is [e_i, e_j]."""
        return self.sc_num[i].T

    # Killing form -----------------------------------------------------------------
    @property
    def killing_num(self) -> np.ndarray:
        """``K_ij = tr(ad_i ad_j)`` as integers over ``sc_den**2``."""
        if not hasattr(self, "_killing"):
            a = self.sc_num
            # tr(ad_i ad_j) = sum_{k,m} c^m_{i k} c^k_{j m}
            k = np.einsum("ikm,jmk->ij", a, a)
            k.setflags(write=False)
            self._killing = k
        return self._killing

    def killing(self, u: Sequence, v: Sequence) -> Fraction:
        du, dv = _common_den(u), _common_den(v)
        un = np.array([int(x * du) for x in u], dtype=object)
        vn = np.array([int(x * dv) for x in v], dtype=object)
        val = un @ self.killing_num.astype(object) @ vn
        return Fraction(int(val), du * dv * self.sc_den ** 2)

    def killing_matrix(self) -> list[list[Fraction]]:
        d = self.sc_den ** 2
        return [[Fraction(int(x), d) for x in row] for row in self.killing_num]

    def restricted_killing(self, rows: Sequence[Sequence]) -> list[list[Fraction]]:
        """Gram matrix of the Killing form on the given 78-vectors."""
        ints = [linalg.primitive(r) for r in rows]
        if not ints:
            return []
        s = np.array(ints, dtype=object)
        g = s @ self.killing_num.astype(object) @ s.T
        d = self.sc_den ** 2
        scale = [_scale_of(r, p) for r, p in zip(rows, ints)]
        return [[Fraction(int(g[a, b]), d) * scale[a] * scale[b] for b in range(len(ints))]
                for a in range(len(ints))]

    # checks ----------------------------------------------------------------------
    def antisymmetric(self) -> bool:
        return bool((self.sc_num == -self.sc_num.transpose(1, 0, 2)).all())

    def jacobi_full(self) -> bool:
        """``ad_[x,y] = [ad_x, ad_y]`` for all basis pairs, which is Jacobi on every triple."""
        a = self.sc_num
        ads = a.transpose(0, 2, 1)  # ads[i] = ad_i
        for i in range(DIM):
            lhs = np.einsum("jm,mab->jab", a[i], ads)  # sum_m c^m_{ij} ad_m
            rhs = ads[i][None] @ ads - ads @ ads[i][None]
            if not (lhs == rhs).all():
                return False
        return True

    def jacobi_random(self, n: int, seed: int = 0, batch: int = 20000) -> int:
        """Check Jacobi on ``n`` random basis triples; returns the number of failures."""
        rng = np.random.default_rng(seed)
        a = self.sc_num
        failures = 0
        done = 0
        while done < n:
            b = min(batch, n - done)
            x, y, z = (rng.integers(0, DIM, size=b) for _ in range(3))
            total = np.zeros((b, DIM), dtype=np.int64)
            for p, q, r in ((x, y, z), (y, z, x), (z, x, y)):
                inner = a[q, r]  # [q, r] coefficients, (b, 78)
                total += np.einsum("bm,bmk->bk", inner, a[p])  # [p, [q, r]]
            failures += int((total != 0).any(axis=1).sum())
            done += b
        return failures

    def is_diagonal_killing(self) -> bool:
        k = self.killing_num
        return not (k - np.diag(np.diag(k))).any()

    def killing_inertia(self) -> tuple[int, int, int]:
        return linalg.inertia(self.killing_matrix())

    def killing_invariance(self, n: int, seed: int = 0) -> int:
        """Failures of ``K([x,y],z) = -K(y,[x,z])`` on ``n`` random basis triples."""
        rng = np.random.default_rng(seed)
        k = self.killing_num
        a = self.sc_num
        x, y, z = (rng.integers(0, DIM, size=n) for _ in range(3))
        lhs = np.einsum("bm,bm->b", a[x, y], k[:, z].T)
        rhs = -np.einsum("bm,bm->b", a[x, z], k[y])
        return int((lhs != rhs).sum())

    # Cartan ------------------------------------------------------------------------
    CARTAN = ("B1_tz", "B2_tz-B3_tz", "R1_xl", "A_l", "G_l", "S1_l")

    def cartan_set(self) -> list[BasisElement]:
        return [self.basis[self.index[n]] for n in self.CARTAN]

    def centralizer(self, vectors: Sequence[Sequence]) -> list[list[Fraction]]:
        """Basis of ``{x : [v, x] = 0 for all v}``."""
        rows = []
        for v in vectors:
            dv = _common_den(v)
            vn = np.array([int(x * dv) for x in v], dtype=object)
            m = np.einsum("i,ijk->kj", vn, self.sc_num.astype(object))  # [v, e_j]_k
            rows.extend([[int(x) for x in r] for r in m])
        return linalg.nullspace(rows, DIM)

    # export ------------------------------------------------------------------------
    def bracket_terms(self):
        """Sparse nonzero brackets ``(i, j, [(k, c), ...])`` for ``i < j``."""
        for i in range(DIM):
            for j in range(i + 1, DIM):
                ks = np.flatnonzero(self.sc_num[i, j])
                if ks.size:
                    yield i, j, [(int(k), Fraction(int(self.sc_num[i, j, k]), self.sc_den))
                                 for k in ks]


def _common_den(v) -> int:
    d = 1
    for x in v:
        if isinstance(x, Fraction):
            d = d * x.denominator // math.gcd(d, x.denominator)
    return d


def _scale_of(row, prim) -> Fraction:
    for a, b in zip(row, prim):
        if b:
            return Fraction(a) / b
    return Fraction(0)


@lru_cache(maxsize=1)
def get_algebra() -> E6Algebra:
    return E6Algebra()


def build_basis() -> list[BasisElement]:
    return get_algebra().basis


def structure_constants() -> E6Algebra:
    return get_algebra()


def killing_form() -> list[list[Fraction]]:
    return get_algebra().killing_matrix()


def cartan_set() -> list[BasisElement]:
    return get_algebra().cartan_set()


# --- serialization ------------------------------------------------------------------

def export_json(alg: E6Algebra) -> str:
    doc = {
        "basis": [{"index": b.index, "name": b.name} for b in alg.basis],
        "brackets": [
            {"i": i, "j": j, "terms": [{"k": k, "c": format_rational(c)} for k, c in terms]}
            for i, j, terms in alg.bracket_terms()
        ],
    }
    return json.dumps(doc, indent=1, ensure_ascii=False) + "\n"


def export_csv(alg: E6Algebra) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["i", "j", "k", "c"])
    for i, j, terms in alg.bracket_terms():
        for k, c in terms:
            w.writerow([i, j, k, format_rational(c)])
    return buf.getvalue()


def export_table(alg: E6Algebra, fmt: str = "json") -> str:
    if fmt == "json":
        return export_json(alg)
    if fmt == "csv":
        return export_csv(alg)
    raise ValueError(f"unknown format {fmt!r}")


def import_json(text: str) -> tuple[list[str], dict]:
    """Parse an exported table into basis names and ``{(i, j): {k: c}}``."""
    doc = json.loads(text)
    names = [b["name"] for b in sorted(doc["basis"], key=lambda b: b["index"])]
    table = {}
    for br in doc["brackets"]:
        table[(br["i"], br["j"])] = {t["k"]: parse_rational(t["c"]) for t in br["terms"]}
    return names, table


def import_csv(text: str) -> dict:
    table: dict = {}
    for row in csv.DictReader(io.StringIO(text)):
        key = (int(row["i"]), int(row["j"]))
        table.setdefault(key, {})[int(row["k"])] = parse_rational(row["c"])
    return table


def table_dict(alg: E6Algebra) -> dict:
    return {(i, j): {k: c for k, c in terms} for i, j, terms in alg.bracket_terms()}
