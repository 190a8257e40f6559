"""Verification suites shared by the command line and the test-suite.

Each suite returns a list of :class:`Check`; nothing here prints.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction

from . import octonion as O
from .jordan import JordanElement, freudenthal_det, shift, trace
from .structure import E6Algebra, get_algebra, reduction_stages, stage_rank, check_dependencies
from .subalgebras import (Catalogue, Check, DIRECT_SUMS, check_chain_cartans, check_decomposition,
                          check_direct_sum, check_stabilizer, octonion_checks, plane_to_ags,
                          registry)
from .tangent import (annihilates_trace, curve_commutator, curve_commutator_composed,
                      det_derivative, matrix_commutator, proportionality, tangent_of)
from .transforms import (all_generators, build_generator, elementary_generators, max_abs_diff,
                         type_permutation_identities, AssociationMismatch)
from . import linalg


@dataclass
class Config:
    tol: float = 1e-10
    samples: int = 20
    seed: int = 20240601
    jacobi: str = "rand:100000"  # or "full"

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError("tolerance must be positive")
        if self.samples < 1:
            raise ValueError("samples must be at least 1")
        if self.jacobi != "full":
            parse_jacobi(self.jacobi)


def parse_jacobi(mode: str) -> int | None:
    """``"full"`` -> None, ``"rand:N"`` -> N."""
    if mode == "full":
        return None
    if mode.startswith("rand:"):
        n = int(mode[5:])
        if n > 0:
            return n
    raise ValueError(f"bad jacobi mode {mode!r}; use full or rand:N")


# --- random points ---------------------------------------------------------------------

def random_float_element(rng: random.Random, scale: float = 1.0) -> JordanElement:
    return JordanElement.from_coordinates([rng.uniform(-scale, scale) for _ in range(27)])


def random_rational_element(rng: random.Random, size: int = 6) -> JordanElement:
    return JordanElement.from_coordinates(
        [Fraction(rng.randint(-size, size), rng.randint(1, size)) for _ in range(27)])


def random_octonion(rng: random.Random, size: int = 6) -> O.Octonion:
    return O.Octonion([Fraction(rng.randint(-size, size), rng.randint(1, size)) for _ in range(8)])


# --- octonion --------------------------------------------------------------------------

def suite_octonion(cfg: Config) -> list[Check]:
    rng = random.Random(cfg.seed)
    units = O.basis()
    out = []
    listed = all(O.oct_mul(O.Octonion.unit(p), O.Octonion.unit(q)) == O.Octonion.unit(r)
                 for r, pairs in O.QUATERNIONIC_PAIRS.items() for p, q in pairs)
    out.append(Check("listed pairs p*q = r", listed))
    out.append(Check("1 is the identity",
                     all(O.oct_mul(units[0], u) == u == O.oct_mul(u, units[0]) for u in units)))
    out.append(Check("imaginary units square to -1",
                     all(O.oct_mul(units[q], units[q]) == -units[0] for q in O.IMAGINARY)))
    out.append(Check("distinct imaginary units anticommute",
                     all(O.oct_mul(units[p], units[q]) == -O.oct_mul(units[q], units[p])
                         for p, q in itertools.combinations(O.IMAGINARY, 2))))
    alt = all(not O.associator(a, a, b) and not O.associator(a, b, b)
              for a, b in itertools.product(units, repeat=2))
    out.append(Check("alternative on basis pairs", alt))
    for which in ("C", "H"):
        span = [u for n, u in enumerate(units) if n in O.SUBALGEBRA_UNITS[which]]
        out.append(Check(f"preferred {which} closed",
                         all(O.subalgebra_membership(O.oct_mul(a, b), which)
                             for a, b in itertools.product(span, repeat=2))))
    comp = True
    for _ in range(cfg.samples):
        a, b = random_octonion(rng), random_octonion(rng)
        comp &= O.oct_norm2(O.oct_mul(a, b)) == O.oct_norm2(a) * O.oct_norm2(b)
    out.append(Check("composition norm2(ab) = norm2(a)norm2(b)", comp))
    i, j, l = (O.Octonion.unit(u) for u in ("i", "j", "l"))
    out.append(Check("nonassociative: [i, j, l] != 0", bool(O.associator(i, j, l))))
    return out


# --- group level (floats) ---------------------------------------------------------------

def suite_group(cfg: Config) -> list[Check]:
    rng = random.Random(cfg.seed)
    pts = [(rng.uniform(-2, 2), random_float_element(rng)) for _ in range(cfg.samples)]
    out = []
    det_err = trace_err = 0.0
    worst = ""
    mismatch = []
    for g in all_generators():
        act = build_generator(g)
        for alpha, X in pts:
            try:
                Y = act(alpha, X, check=True, tol=cfg.tol)
            except AssociationMismatch:
                mismatch.append(g.label)
                Y = act(alpha, X)
            e = abs(freudenthal_det(Y) - freudenthal_det(X)) / max(1.0, abs(freudenthal_det(X)))
            if e > det_err:
                det_err, worst = e, g.label
            if g.is_rotation:
                trace_err = max(trace_err, abs(trace(Y) - trace(X)))
    out.append(Check("135 generators preserve det", det_err <= cfg.tol,
                     f"max rel err {det_err:.2e} ({worst})"))
    out.append(Check("rotations preserve trace", trace_err <= cfg.tol, f"max err {trace_err:.2e}"))
    out.append(Check("both association orders agree", not mismatch, ",".join(sorted(set(mismatch)))))
    for kind in "AG":
        err = 0.0
        for q in O.UNIT_NAMES[1:]:
            acts = [build_generator(f"{kind}{a}_{q}") for a in (1, 2, 3)]
            for alpha, X in pts:
                ys = [f(alpha, X) for f in acts]
                err = max(err, max_abs_diff(ys[0], ys[1]), max_abs_diff(ys[0], ys[2]))
        out.append(Check(f"{kind}_q type independent at finite angle", err <= cfg.tol,
                         f"max err {err:.2e}"))
    samples = [X for _, X in pts]
    for label, (ok, err) in type_permutation_identities(samples, cfg.tol).items():
        out.append(Check(label, ok, f"max err {err:.2e}"))
    out.append(Check("T^3 = I", all(shift(X, 3) == X for X in samples)))
    qrng = random.Random(cfg.seed + 1)
    rat = [random_rational_element(qrng) for _ in range(cfg.samples)]
    out.append(Check("T preserves det exactly",
                     all(freudenthal_det(shift(X)) == freudenthal_det(X) for X in rat)))
    return out


# --- structure ---------------------------------------------------------------------------

def commutator_kappa(pairs=None, literal_sample: int = 0, seed: int = 0):
    """Measure ``kappa`` on the first pair and test it on every pair.

    Returns ``(kappa, failures, checked)``; failures lists offending pairs.
    """
    if pairs is None:
        pairs = list(itertools.combinations(elementary_generators(), 2))
    kappa = None
    bad = []
    for a, b in pairs:
        mc = matrix_commutator(tangent_of(a), tangent_of(b))
        cc = curve_commutator_composed(a, b)
        if kappa is None and not mc.is_zero():
            kappa = proportionality(cc, mc)
            if kappa is None:
                bad.append((a.label, b.label))
                continue
        if kappa is not None and cc != mc * kappa:
            bad.append((a.label, b.label))
    rng = random.Random(seed)
    sample = rng.sample(pairs, min(literal_sample, len(pairs)))
    for a, b in sample:
        if curve_commutator(a, b) != curve_commutator_composed(a, b):
            bad.append(("literal", a.label, b.label))
    return kappa, bad, len(pairs) + len(sample)


def suite_structure(cfg: Config, alg: E6Algebra | None = None) -> list[Check]:
    alg = alg or get_algebra()
    out = []
    for key, labels in reduction_stages().items():
        r = stage_rank(labels)
        out.append(Check(f"rank {key}-set = 78", r == 78, f"{len(labels)} maps, rank {r}"))
    for name, ok in check_dependencies().items():
        out.append(Check(f"dependency {name}", ok))
    out.append(Check("78x78 brackets re-expressed in basis", alg.sc_num.shape == (78, 78, 78)))
    out.append(Check("antisymmetry", alg.antisymmetric()))
    n = parse_jacobi(cfg.jacobi)
    if n is None:
        out.append(Check("Jacobi (all triples)", alg.jacobi_full()))
    else:
        bad = alg.jacobi_random(n, seed=cfg.seed)
        out.append(Check(f"Jacobi ({n} random triples)", bad == 0, f"{bad} failures"))
    out.append(Check("Killing form diagonal", alg.is_diagonal_killing()))
    inertia = alg.killing_inertia()
    out.append(Check("Killing inertia (52,0,26)", inertia == (52, 0, 26), str(inertia)))
    bad = alg.killing_invariance(1000, seed=cfg.seed)
    out.append(Check("Killing ad-invariance", bad == 0, f"{bad} failures"))
    cart = [alg.vector(b.name) for b in alg.cartan_set()]
    comm = all(not any(alg.bracket(u, v)) for u, v in itertools.combinations(cart, 2))
    out.append(Check("Cartan set commutes", comm))
    cdim = len(alg.centralizer(cart))
    out.append(Check("Cartan centralizer dim 6", cdim == 6, str(cdim)))
    cin = linalg.inertia(alg.restricted_killing(cart))
    out.append(Check("Killing on Cartan (4,0,2)", cin == (4, 0, 2), str(cin)))
    gens = all_generators()
    out.append(Check("rotation tangents annihilate trace",
                     all(annihilates_trace(tangent_of(g)) for g in gens if g.is_rotation)))
    rng = random.Random(cfg.seed)
    pts = [random_rational_element(rng) for _ in range(10)]
    bad = [g.label for g in gens if any(det_derivative(tangent_of(g), X) for X in pts)]
    out.append(Check("tangents preserve det infinitesimally", not bad, ",".join(bad[:5])))
    kappa, bad, count = commutator_kappa(literal_sample=20, seed=cfg.seed)
    out.append(Check(f"curve commutator = kappa [L1,L2] on {count} pairs", not bad and kappa is not None,
                     f"kappa = {kappa}; {len(bad)} failures"))
    return out


# --- chains and stabilizers -----------------------------------------------------------------

def suite_chains(cfg: Config, cat: Catalogue | None = None, threads: int = 1) -> list[Check]:
    cat = cat or Catalogue()
    out = []
    names = [r.name for r in registry()]
    reports = [cat.verify_record(n) for n in names]
    for rep in reports:
        failed = [k for k, ok in rep.checks.items() if not ok]
        sig = "" if rep.expected_signature is None else f" sig {rep.signature}"
        out.append(Check(f"{rep.name} dim {rep.dim}{sig}", rep.ok,
                         "failed: " + ", ".join(failed) if failed else ""))
    for left, right, dim in DIRECT_SUMS:
        rep = check_direct_sum(cat.alg, cat.algebra(left), cat.algebra(right), (left, right))
        detail = "" if rep.ok else (
            f"commuting={rep.commuting} trivial_intersection={rep.trivial_intersection} "
            f"closed={rep.closed} nonzero brackets={rep.nonzero_brackets} "
            f"of {cat.algebra(left).dim}x{cat.algebra(right).dim}")
        out.append(Check(f"{left} + {right} direct sum, dim {dim}", rep.ok and rep.dim == dim,
                         detail))
    out.extend(check_chain_cartans(cat))
    out.extend(octonion_checks(cat.alg))
    m, inv = plane_to_ags()
    det = linalg.determinant(m)
    out.append(Check("plane -> A/G/S change of basis invertible", det != 0, f"det {det}"))
    return out


def suite_stabilizers(cfg: Config, cat: Catalogue | None = None) -> list[Check]:
    cat = cat or Catalogue()
    out = check_decomposition(cat)
    for a in (1, 2, 3):
        out.extend(check_stabilizer(cat, a))
    return out


SUITES = ("octonion", "group", "structure", "chains", "stabilizers")


def run_suite(name: str, cfg: Config) -> list[Check]:
    fn = {"octonion": suite_octonion, "group": suite_group, "structure": suite_structure,
          "chains": suite_chains, "stabilizers": suite_stabilizers}[name]
    return fn(cfg)
