"""Command-line driver: ``kcol <command> [options]``."""
from __future__ import annotations

import argparse
import os
import sys
import time

from . import bounds
from .constructions import KINDS, ConstructionSpec, random_colouring
from .extract import extract_32k, extract_jump, extract_r21, witness_ok
from .graph import InputError, restrict
from .kcol_io import KcolParseError, RunReport, emit_report, read_colouring, write_colouring
from .lemmas import mader_extract
from .search import EXACT, HEURISTIC, Query, M_value, SearchRefused, m_bruteforce
from .suites import SUITES, run_suite


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS,
                        help="report format (default: json)")
    common.add_argument("--exact-cap", type=_positive, default=argparse.SUPPRESS,
                        help="largest vertex count for exact subgraph search (default 24)")
    common.add_argument("--budget", type=_positive, default=argparse.SUPPRESS,
                        help="colour-subset or colouring enumeration budget")
    common.add_argument("--threads", type=_positive, default=argparse.SUPPRESS,
                        help="worker processes for brute force (default 1)")

    p = argparse.ArgumentParser(prog="kcol", parents=[common],
                                description="Large k-connected subgraphs in edge-coloured complete graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", parents=[common], help="build a named construction")
    c.add_argument("--kind", choices=KINDS, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--r", type=int)
    c.add_argument("--s", type=int)
    c.add_argument("--k", type=int)
    c.add_argument("--out", help=".kcol output path (stdout report only if omitted)")

    e = sub.add_parser("evaluate", parents=[common], help="compute M(f,n,r,s,k) for a colouring file")
    e.add_argument("--in", dest="inp", required=True)
    e.add_argument("--s", type=int, required=True)
    e.add_argument("--k", type=int, default=1)
    e.add_argument("--mode", choices=(EXACT, HEURISTIC), default=EXACT)

    b = sub.add_parser("brute", parents=[common], help="compute m(n,r,s,k) by exhaustive search")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--r", type=int, required=True)
    b.add_argument("--s", type=int, required=True)
    b.add_argument("--k", type=int, default=1)
    b.add_argument("--vertex-sym", action="store_true", help="also reduce by vertex permutations")

    x = sub.add_parser("extract", parents=[common], help="run a constructive extraction")
    x.add_argument("--algo", choices=("r21", "32k", "jump", "mader"), required=True)
    x.add_argument("--in", dest="inp", required=True)
    x.add_argument("--s", type=int, default=2)
    x.add_argument("--k", type=int, default=1)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("--suite", choices=SUITES, required=True)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--quick", action="store_true", help="smaller instance counts")

    r = sub.add_parser("random", parents=[common], help="write a seeded uniform random colouring")
    r.add_argument("--n", type=int, required=True)
    r.add_argument("--r", type=int, required=True)
    r.add_argument("--seed", type=int, required=True)
    r.add_argument("--out", required=True)
    return p


def _apply_budgets(args) -> None:
    # search reads these at call time
    for flag, env in (("exact_cap", "KCOL_EXACT_CAP"), ("threads", "KCOL_THREADS")):
        if hasattr(args, flag):
            os.environ[env] = str(getattr(args, flag))
    if hasattr(args, "budget"):
        os.environ["KCOL_BUDGET"] = str(args.budget)
        os.environ["KCOL_BRUTE_BUDGET"] = str(args.budget)


def _config(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k != "format" and v is not None}


def cmd_construct(args, report: RunReport) -> None:
    spec = ConstructionSpec(args.kind, args.n, args.r, args.s, args.k)
    f = spec.build()
    if args.out:
        write_colouring(f, args.out)
    report.results.append({"name": "construction", "kind": spec.kind, "n": f.n, "r": f.r,
                           "colours_used": list(f.used_colours()), "part_sizes": spec.part_sizes})


def cmd_evaluate(args, report: RunReport) -> None:
    f = read_colouring(args.inp)
    rep = M_value(f, Query(args.s, args.k, args.mode))
    report.results.append({"name": "M", **rep.stable_dict()})
    report.timings["search"] = rep.elapsed
    if rep.value:
        report.check("witness re-verifies", witness_ok(f, rep.witness_vertices, rep.witness_colours, args.k)
                     and len(rep.witness_colours) <= args.s)


def cmd_brute(args, report: RunReport) -> None:
    sym = "colour-and-vertex" if args.vertex_sym else "colour-perm"
    workers = int(os.environ.get("KCOL_THREADS", "1"))
    rep = m_bruteforce(args.n, args.r, Query(args.s, args.k), sym, workers=workers)
    report.results.append({"name": "m", **rep.stable_dict()})
    report.timings["search"] = rep.elapsed
    n, k = args.n, args.k
    expected = clause = None
    if args.r == 3 and args.s == 2 and (n <= 3 * k - 3 or n >= 13 * k - 15):
        expected, clause = bounds.three_two_exact(n, k), "m(n,3,2,k) = n-k+1 (0 when n <= 3k-3)"
    elif args.r == 2 and args.s == 1 and n >= 13 * k - 15:
        expected, clause = bounds.two_colour_exact(n, k), "m(n,2,1,k) = n-2k+2"
    elif args.s >= args.r and k == 1:
        expected, clause = n, "m(n,r,s,1) = n when s >= r"
    if expected is not None:
        report.check(f"{clause}: m({n},{args.r},{args.s},{k}) = {expected}", rep.value == expected,
                     f"got {rep.value}")


def cmd_extract(args, report: RunReport) -> None:
    f = read_colouring(args.inp)
    if args.algo == "mader":
        counts = f.colour_counts()
        colour = max(sorted(counts), key=lambda c: counts[c])
        g = restrict(f, None, [colour])
        rep = mader_extract(g)
        report.results.append({"name": "mader", "colour": colour, "alpha": str(rep.alpha),
                               "witness_vertices": list(rep.subgraph.vertices),
                               "connectivity": rep.connectivity, "verified": rep.verified})
        report.check("connectivity >= average degree / 4", rep.verified and 4 * rep.connectivity >= rep.alpha)
        return
    if args.algo == "r21":
        rep, k, s = extract_r21(f), 1, 2
    elif args.algo == "32k":
        rep, k, s = extract_32k(f, args.k), args.k, 2
    else:
        rep, k, s = extract_jump(f, args.s, args.k), args.k, args.s
    report.results.append({"name": args.algo, **rep.stable_dict()})
    report.timings["extract"] = rep.elapsed
    if rep.value:
        report.check(f"output is {k}-connected", witness_ok(f, rep.witness_vertices, rep.witness_colours, k))
    report.check(f"output uses at most {s} colours", len(rep.witness_colours) <= s)
    if args.algo == "r21" and (4 * f.n) % (f.r + 1) == 0:
        report.check("m(n,r,2,1) >= 4n/(r+1)", rep.value * (f.r + 1) >= 4 * f.n)
    if args.algo == "32k":
        report.check("m(n,3,2,k) >= n-k+1", rep.value >= f.n - args.k + 1)
    if args.algo == "jump" and args.k == 1 and "exhaustive-subsets" in rep.flags:
        need = bounds.rootk1_lower(f.n, f.r, args.s)
        report.check("m(n,r,s,1) >= (1 - e^{-s^2/3r}) n", rep.value >= need, f"needed {need}")


def cmd_random(args, report: RunReport) -> None:
    f = random_colouring(args.n, args.r, args.seed)
    write_colouring(f, args.out)
    report.results.append({"name": "random", "n": f.n, "r": f.r, "seed": args.seed,
                           "colour_counts": [f.colour_counts().get(c, 0) for c in range(1, f.r + 1)]})


COMMANDS = {"construct": cmd_construct, "evaluate": cmd_evaluate, "brute": cmd_brute,
            "extract": cmd_extract, "random": cmd_random}


def run(args) -> RunReport:
    _apply_budgets(args)
    if args.command == "verify":
        return run_suite(args.suite, args.seed, args.quick, int(os.environ.get("KCOL_THREADS", "1")))
    report = RunReport(config=_config(args))
    start = time.perf_counter()
    COMMANDS[args.command](args, report)
    report.timings["total"] = time.perf_counter() - start
    return report


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = run(args)
    except SearchRefused as exc:
        print(f"kcol: refused: {exc}", file=sys.stderr)
        return 2
    except (InputError, KcolParseError, OSError) as exc:
        print(f"kcol: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(emit_report(report, getattr(args, "format", "json")))
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
