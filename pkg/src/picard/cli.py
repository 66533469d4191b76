"""
Command line entry point.

    picard verify-relators
    picard enumerate --k 2 [--json]
    picard cycles --k 2 [--dot out.dot] [--json out.json]
    picard classify A B C
    picard check-properties --k-max 3 --seed 7

Exit codes: 0 success, 1 a property or structural check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import group, properties
from .enumeration import enumerate_ambiguous
from .exceptions import ClosureViolation, PropositionViolation
from .graph import build_graph, check_structure, components, export_dot, export_json, layer_cycles
from .quadratic import AmbiguityClass, classify, d_value, render
from .quadratic import canonicalize as _canonicalize


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="picard",
        description="Ambiguous numbers of Q(i, sqrt3) under the Picard group.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("verify-relators", help="check the relators of the group presentation")

    p = sub.add_parser("enumerate", help="list ambiguous numbers (a + k*sqrt3)/c")
    p.add_argument("--k", type=_positive_int, required=True)
    p.add_argument("--json", action="store_true", help="emit JSON instead of a table")

    p = sub.add_parser("cycles", help="build the closed path of ambiguous numbers for k*sqrt3")
    p.add_argument("--k", type=_positive_int, required=True)
    p.add_argument("--dot", type=Path, metavar="FILE")
    p.add_argument("--json", type=Path, metavar="FILE")

    p = sub.add_parser("classify", help="classify (a + b*sqrt3)/c")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("c", type=int)

    p = sub.add_parser("check-properties", help="run every property suite")
    p.add_argument("--k-max", type=_positive_int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n-random", type=_positive_int, default=1000)
    return parser


def cmd_verify_relators(out=sys.stdout, generators=None) -> int:
    results = group.verify_relators(generators)
    for r in results:
        print(r.line(), file=out)
    return 0 if all(r.passed for r in results) else 1


def cmd_enumerate(k: int, as_json: bool = False, out=sys.stdout) -> int:
    result = enumerate_ambiguous(k)
    if as_json:
        print(json.dumps(result.to_json(), indent=2, ensure_ascii=False), file=out)
        return 0
    print(f"k: {k}", file=out)
    print(f"count: {len(result.members)}", file=out)
    print(f"excluded: {len(result.excluded)}", file=out)
    print(f"{'a':>6} {'c':>8} {'d':>8}  value", file=out)
    for q in result.members:
        print(f"{q.a:>6} {q.c:>8} {d_value(q).numerator:>8}  {render(q)}", file=out)
    return 0


def cmd_cycles(k: int, dot: Path | None = None, json_path: Path | None = None, out=sys.stdout, err=sys.stderr) -> int:
    try:
        g = build_graph(k)
    except (ClosureViolation, PropositionViolation) as exc:
        print(f"violated: {type(exc).__name__}: {exc}", file=err)
        return 1
    problems = check_structure(g)
    if not any(p.startswith("perfect matching") for p in problems):
        cycles = layer_cycles(g)
        lengths = ", ".join(str(len(c)) for c in cycles)
        print(f"vertices: {len(g.vertices)}", file=out)
        print(f"cycles: {len(cycles)} (lengths {lengths})", file=out)
        print(f"components with B edges: {len(components(g))}", file=out)
        if dot is not None:
            dot.write_text(export_dot(g), encoding="utf-8")
        if json_path is not None:
            json_path.write_text(export_json(g), encoding="utf-8")
    if problems:
        for p in problems:
            print(f"violated: {p}", file=err)
        return 1
    return 0


def cmd_classify(a: int, b: int, c: int, out=sys.stdout, err=sys.stderr) -> int:
    if c == 0:
        print("error: c must be nonzero", file=err)
        return 2
    q = _canonicalize(a, b, c)
    cls = classify(q)
    d = d_value(q)
    integral = "integral" if d.denominator == 1 else "not integral"
    if cls is AmbiguityClass.RationalDegenerate:
        print(f"{cls}, value = {render(q)}", file=out)
    else:
        print(f"{cls}, d = {d}, {integral}", file=out)
    return 0


def cmd_check_properties(k_max: int, seed: int, n_random: int = 1000, out=sys.stdout, err=sys.stderr,
                         generators=None) -> int:
    results = properties.run_all(k_max, seed, n_random, generators)
    for r in results:
        print(r.line(), file=out)
    for r in results:
        if not r.passed:
            print(f"violated: {r.name}; witness: {r.witness}", file=err)
            return 1
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "verify-relators":
        return cmd_verify_relators()
    if args.command == "enumerate":
        return cmd_enumerate(args.k, args.json)
    if args.command == "cycles":
        return cmd_cycles(args.k, args.dot, args.json)
    if args.command == "classify":
        return cmd_classify(args.a, args.b, args.c)
    if args.command == "check-properties":
        return cmd_check_properties(args.k_max, args.seed, args.n_random)
    parser.error(f"unknown command {args.command}")  # pragma: no cover
    return 2


if __name__ == "__main__":
    sys.exit(main())
