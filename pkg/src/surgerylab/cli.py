"""
Command line front end.  Every command prints a JSON report to stdout and a
short human summary to stderr.

Exit codes: 0 success, 1 a check failed or the solver did not find a
geometric structure, 2 invalid input.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from .invariants import kp_invariants
from .knots import classify_surgery
from .slopes import parse_slope
from .triangulation.bundled import bundled_name, bundled_text
from .triangulation.core import TriangulationError, parse_triangulation
from .triangulation.solver import DEFAULT_MAX_ITER, DEFAULT_TOL, solve_geometric


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def default_tol() -> float:
    raw = os.environ.get("SURGERYLAB_TOL")
    if raw is None:
        return DEFAULT_TOL
    try:
        tol = float(raw)
    except ValueError:
        raise UsageError(f"SURGERYLAB_TOL={raw!r} is not a number")
    if not tol > 0:
        raise UsageError("SURGERYLAB_TOL must be positive")
    return tol


def parse_p_range(text: str) -> list:
    """``5``, ``5..99`` or ``5,7,11``; only odd values are kept from a range."""
    text = text.strip()
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
            if lo > hi:
                raise UsageError(f"empty range {text!r}")
            lo += (lo + 1) % 2
            values = list(range(lo, hi + 1, 2))
        else:
            values = sorted({int(x) for x in text.split(",") if x.strip()})
    except ValueError:
        raise UsageError(f"cannot parse p range {text!r}")
    if not values:
        raise UsageError(f"empty range {text!r}")
    return values


def parse_fill(text: str):
    cusp, sep, slope = text.partition("=")
    if not sep:
        raise UsageError(f"--fill expects CUSP=SLOPE, got {text!r}")
    try:
        return int(cusp), parse_slope(slope)
    except ValueError as exc:
        raise UsageError(f"bad --fill {text!r}: {exc}")


def read_triangulation(name: str):
    path = Path(name)
    if path.exists():
        return parse_triangulation(path.read_text())
    if bundled_name(name):
        return parse_triangulation(bundled_text(name))
    raise UsageError(f"no such file or bundled triangulation: {name}")


def cmd_classify(args):
    try:
        c = classify_surgery(args.p, args.q, args.r)
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc))
    result = c.to_json()
    summary = f"P(-2,{c.knot.p},{c.knot.q})({c.slope}): {result['verdict']}"
    return {"p": args.p, "q": args.q, "r": args.r}, result, summary, 0


def cmd_invariants(args):
    ps = parse_p_range(args.p)
    signs = [args.sign] if args.sign else ["+", "-"]
    records = []
    try:
        for p in ps:
            for s in signs:
                records.append(kp_invariants(p, s))
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc))
    ok = all(r["montesinos_excluded"] and r["torus_excluded"] for r in records)
    bad = [f"{r['p']}{r['sign']}" for r in records
           if not (r["montesinos_excluded"] and r["torus_excluded"])]
    summary = f"{len(records)} knots K_p+-, p in [{ps[0]}, {ps[-1]}]: " + \
        ("all obstructions hold" if ok else "obstruction failed for " + ", ".join(bad))
    return {"p": ps, "signs": signs}, records, summary, 0 if ok else 1


def cmd_solve(args):
    tol = args.tol if args.tol is not None else default_tol()
    if tol <= 0:
        raise UsageError("--tol must be positive")
    try:
        T = read_triangulation(args.file)
    except (TriangulationError, OSError) as exc:
        raise UsageError(f"{args.file}: {exc}")
    fills = dict(parse_fill(f) for f in args.fill)
    for c in fills:
        if not 0 <= c < T.num_cusps:
            raise UsageError(f"no cusp {c}; the triangulation has {T.num_cusps}")
    sol = solve_geometric(T, fills, tol=tol, max_iter=args.max_iter)
    result = sol.to_json()
    summary = f"{args.file}: {sol.status.value}"
    if sol.is_geometric:
        summary += f", volume {result['volume']:.10f}"
    elif sol.diagnostic:
        summary += f" ({sol.diagnostic})"
    inputs = {"file": args.file, "fillings": {str(c): str(s) for c, s in fills.items()},
              "tol": tol, "max_iter": args.max_iter}
    return inputs, result, summary, 0 if sol.is_geometric else 1


def build_parser():
    ap = _Parser(prog="surgerylab", description=__doc__.strip().splitlines()[0])
    ap.add_argument("--json-only", action="store_true",
                    help="suppress the summary on stderr")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("classify", help="classify r-surgery on P(-2,p,q)")
    c.add_argument("-p", type=int, required=True)
    c.add_argument("-q", type=int, required=True)
    c.add_argument("-r", type=str, required=True, help="slope, e.g. 20 or 41/2")
    c.set_defaults(func=cmd_classify)

    i = sub.add_parser("invariants", help="obstruction sweep over K_p+-")
    i.add_argument("--p", required=True, help="5, 5..99 or 5,7,11")
    i.add_argument("--sign", choices=["+", "-"])
    i.set_defaults(func=cmd_invariants)

    s = sub.add_parser("solve", help="hyperbolic structure of a triangulation")
    s.add_argument("file", help=".tri file or a bundled name (fig8, sister, magic)")
    s.add_argument("--fill", action="append", default=[], metavar="CUSP=SLOPE")
    s.add_argument("--tol", type=float)
    s.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITER)
    s.set_defaults(func=cmd_solve)
    return ap


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    # accepted before or after the subcommand
    json_only = "--json-only" in argv
    argv = [a for a in argv if a != "--json-only"]
    start = time.perf_counter()
    try:
        args = build_parser().parse_args(argv)
        inputs, result, summary, code = args.func(args)
    except UsageError as exc:
        print(json.dumps({"command": argv[0] if argv else None, "error": str(exc)}))
        if not json_only:
            print(f"surgerylab: error: {exc}", file=sys.stderr)
        return 2
    report = {"command": args.command, "inputs": inputs, "result": result,
              "elapsed": round(time.perf_counter() - start, 6)}
    print(json.dumps(report, indent=2))
    if not json_only:
        print(summary, file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
