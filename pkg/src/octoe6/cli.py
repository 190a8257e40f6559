"""``octo-e6``: build, verify, export and query sl(3,O)."""

from __future__ import annotations

import argparse
import json
import os
import sys
import traceback
from concurrent.futures import ThreadPoolExecutor

from . import __version__
from .octonion import format_table
from .scalars import format_rational
from .structure import export_table, get_algebra
from .subalgebras import Subspace, close, commute, signature
from .suites import SUITES, Config, run_suite, suite_chains, suite_group

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


def thread_cap() -> int:
    try:
        return max(1, int(os.environ.get("OCTOE6_THREADS", "1")))
    except ValueError:
        return 1


def _config(args) -> Config:
    return Config(tol=args.tol, samples=args.samples, seed=args.seed, jacobi=args.jacobi)


def _emit(text: str, path: str | None):
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def render(results: dict, fmt: str) -> str:
    """``results`` maps suite name to a list of checks, in display order."""
    if fmt == "json":
        doc = {
            "suites": [
                {"suite": name,
                 "checks": [{"name": c.name, "status": "pass" if c.ok else "fail",
                             **({"witness": c.detail} if c.detail and not c.ok else {})}
                            for c in checks]}
                for name, checks in results.items()
            ],
        }
        doc["passed"] = all(c.ok for checks in results.values() for c in checks)
        return json.dumps(doc, indent=1) + "\n"
    lines = []
    for name, checks in results.items():
        lines.append(f"== {name}")
        for c in checks:
            tail = f"  [{c.detail}]" if c.detail else ""
            lines.append(f"{'PASS' if c.ok else 'FAIL'}  {c.name}{tail}")
    total = sum(len(v) for v in results.values())
    failed = sum(not c.ok for v in results.values() for c in v)
    lines.append(f"{total - failed}/{total} checks passed")
    return "\n".join(lines) + "\n"


def _status(results: dict) -> int:
    return EXIT_OK if all(c.ok for v in results.values() for c in v) else EXIT_FAIL


# --- commands ---------------------------------------------------------------------------

def cmd_verify(args) -> int:
    cfg = _config(args)
    suite = args.suite_opt or args.suite
    names = SUITES if suite == "all" else (suite,)
    if len(names) > 1 and thread_cap() > 1:
        get_algebra()  # build once before fanning out
        with ThreadPoolExecutor(max_workers=thread_cap()) as pool:
            futures = {n: pool.submit(run_suite, n, cfg) for n in names}
            results = {n: futures[n].result() for n in names}
    else:
        results = {n: run_suite(n, cfg) for n in names}
    _emit(render(results, args.format), args.output)
    return _status(results)


def cmd_group_check(args) -> int:
    results = {"group": suite_group(_config(args))}
    _emit(render(results, args.format), args.output)
    return _status(results)


def cmd_chains(args) -> int:
    results = {"chains": suite_chains(_config(args))}
    _emit(render(results, args.format), args.output)
    return _status(results)


def cmd_table(args) -> int:
    if args.octonions:
        _emit(format_table() + "\n", args.output)
        return EXIT_OK
    fmt = args.format if args.format in ("json", "csv") else "json"
    _emit(export_table(get_algebra(), fmt), args.output)
    return EXIT_OK


def cmd_octonions(args) -> int:
    _emit(format_table() + "\n", args.output)
    return EXIT_OK


def cmd_killing(args) -> int:
    alg = get_algebra()
    k = alg.killing_matrix()
    diag = [(b.name, k[b.index][b.index]) for b in alg.basis]
    neg = sum(v < 0 for _, v in diag)
    pos = sum(v > 0 for _, v in diag)
    if args.format == "json":
        doc = {"diagonal": [{"index": n, "name": name, "value": format_rational(v)}
                            for n, (name, v) in enumerate(diag)],
               "diagonal_only": alg.is_diagonal_killing(), "negative": neg, "positive": pos}
        text = json.dumps(doc, indent=1) + "\n"
    else:
        lines = [f"{n:2d}  {name:14s} {format_rational(v)}" for n, (name, v) in enumerate(diag)]
        lines.append(f"off-diagonal entries vanish: {alg.is_diagonal_killing()}")
        lines.append(f"negative {neg}, positive {pos}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return EXIT_OK


def cmd_basis(args) -> int:
    alg = get_algebra()
    if args.format == "json":
        doc = [{"index": b.index, "name": b.name, "compact": b.compact,
                "recipe": [{"generator": g, "c": format_rational(c)} for g, c in b.recipe]}
               for b in alg.basis]
        text = json.dumps(doc, indent=1) + "\n"
    else:
        text = "".join(
            f"{b.index:2d}  {b.name:14s} {'rotation' if b.compact else 'boost':8s} "
            + " ".join(f"{format_rational(c)}*{g}" for g, c in b.recipe) + "\n"
            for b in alg.basis)
    _emit(text, args.output)
    return EXIT_OK


def cmd_closure(args) -> int:
    alg = get_algebra()
    gens = [g.strip() for g in args.gens.split(",") if g.strip()]
    try:
        span = Subspace.span(alg, gens)
    except (KeyError, ValueError) as exc:
        print(f"octo-e6: bad generator: {exc}", file=sys.stderr)
        return EXIT_ERROR
    full = close(alg, span)
    neg, zero, pos = signature(alg, full)
    if args.format == "json":
        doc = {"generators": gens, "span_dim": span.dim, "dim": full.dim,
               "signature": {"negative": neg, "zero": zero, "positive": pos}}
        if args.report:
            doc["already_closed"] = span.dim == full.dim
            doc["abelian"] = not commute(alg, full, full)
        text = json.dumps(doc, indent=1) + "\n"
    else:
        lines = [f"generators: {', '.join(gens)}", f"span dim: {span.dim}",
                 f"closure dim: {full.dim}", f"signature (neg, zero, pos): ({neg}, {zero}, {pos})"]
        if args.report:
            lines.append(f"already closed: {span.dim == full.dim}")
            members = [n for n in alg.names if full.contains(alg.vector(n))]
            lines.append("basis elements inside: " + (", ".join(members) or "none"))
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return EXIT_OK


# --- parser -----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--tol", type=float, default=1e-10)
    common.add_argument("--samples", type=int, default=20)
    common.add_argument("--seed", type=int, default=Config.seed)
    common.add_argument("--jacobi", default="rand:100000", help="full or rand:N")
    common.add_argument("-o", "--output", metavar="FILE")

    p = argparse.ArgumentParser(prog="octo-e6", description=__doc__)
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("suite", nargs="?", default="all", choices=SUITES + ("all",))
    v.add_argument("--suite", dest="suite_opt", choices=SUITES + ("all",))
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", parents=[common], help="export the commutation table")
    t.add_argument("--octonions", action="store_true", help="print the octonion table instead")
    t.set_defaults(func=cmd_table)

    sub.add_parser("killing", parents=[common], help="Killing form diagonal").set_defaults(
        func=cmd_killing)

    c = sub.add_parser("closure", parents=[common], help="closure of a generator list")
    c.add_argument("--gens", required=True, help="comma separated, e.g. A_k,A_kl,A_l")
    c.add_argument("--report", action="store_true")
    c.set_defaults(func=cmd_closure)

    sub.add_parser("chains", parents=[common], help="subalgebra chain table").set_defaults(
        func=cmd_chains)
    sub.add_parser("basis", parents=[common], help="list the 78 basis elements").set_defaults(
        func=cmd_basis)
    sub.add_parser("group-check", parents=[common], help="finite-angle checks").set_defaults(
        func=cmd_group_check)
    sub.add_parser("octonions", parents=[common], help="octonion product table").set_defaults(
        func=cmd_octonions)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _config(args)
    except ValueError as exc:
        parser.error(str(exc))
    try:
        return args.func(args)
    except Exception:  # noqa: BLE001 - report, then signal internal error
        traceback.print_exc()
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
