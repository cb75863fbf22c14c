"""Command-line front end: solve, cross-check, generate, and benchmark.

Exit codes: 0 success, 2 bad input or parameters, 3 unsolvable instance,
4 internal invariant breach, 5 oracle budget exceeded, 1 oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .cover import solve, verify_cover
from .errors import InternalInvariantError
from .generate import random_connected_graph
from .graph import GraphFormatError, parse_graph, serialize_graph
from .oracle import OracleBudget, OracleBudgetError, brute_mc

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_NO_COVER = 3
EXIT_INTERNAL = 4
EXIT_BUDGET = 5


def _load_graph(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        return None, EXIT_USAGE
    try:
        return parse_graph(text), EXIT_OK
    except GraphFormatError as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        return None, EXIT_USAGE


def _fmt_matching(m) -> str:
    return " ".join(f"{u + 1}-{v + 1}" for u, v in m.edges())


def cmd_solve(args) -> int:
    g, code = _load_graph(args.file)
    if g is None:
        return code
    if g.n == 1:
        print("error: no matching cover exists for a single vertex", file=sys.stderr)
        return EXIT_NO_COVER

    trace = None
    if args.trace:

        def trace(path, delta):
            print(
                f"transform: origin={path.origin + 1} terminus={path.terminus + 1}"
                f" length={len(path.vertices) - 1} delta={delta}"
            )

    try:
        result = solve(g, trace=trace)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_COVER
    except InternalInvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL

    if args.verify and not verify_cover(g, result.cover):
        print("internal error: produced cover failed verification", file=sys.stderr)
        return EXIT_INTERNAL

    if args.json:
        obj = {
            "schema": 1,
            "instance": os.path.basename(args.file),
            "n": g.n,
            "m": g.m,
            "mc": result.cover.k,
            "branch": result.branch,
            "md": result.md,
            "transforms": result.transforms,
            "cover": [
                [[u + 1, v + 1] for u, v in m.edges()]
                for m in result.cover.matchings
            ],
        }
        print(json.dumps(obj))
    else:
        print(f"mc = {result.cover.k}")
        for i, m in enumerate(result.cover.matchings, start=1):
            print(f"M{i}: {_fmt_matching(m)}")
    return EXIT_OK


def cmd_oracle(args) -> int:
    g, code = _load_graph(args.file)
    if g is None:
        return code
    budget = OracleBudget(
        max_vertices=args.max_n, max_edges=args.max_n * (args.max_n - 1) // 2
    )
    try:
        expected = brute_mc(g, budget)
    except OracleBudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_COVER
    try:
        got = solve(g).cover.k
    except InternalInvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    status = "OK" if got == expected else "MISMATCH"
    print(f"pipeline={got} oracle={expected} {status}")
    return EXIT_OK if got == expected else EXIT_MISMATCH


def cmd_random(args) -> int:
    try:
        for i in range(args.count):
            g = random_connected_graph(
                args.n, p=args.p, m=args.m, seed=args.seed + i
            )
            if args.count > 1:
                print(f"c instance {i}")
            print(serialize_graph(g))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    print("n,m,seconds,transforms")
    for n in sizes:
        m = 3 * n
        g = random_connected_graph(n, m=m, seed=args.seed + n)
        start = time.perf_counter()
        result = solve(g)
        elapsed = time.perf_counter() - start
        print(f"{n},{m},{elapsed:.3f},{result.transforms}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matchcover",
        description="Optimal matching covers of simple connected graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve one instance file")
    p_solve.add_argument("file")
    p_solve.add_argument("--json", action="store_true", help="emit a JSON report")
    p_solve.add_argument(
        "--verify", action="store_true", help="re-verify the produced cover"
    )
    p_solve.add_argument(
        "--trace", action="store_true", help="log each switching-path transform"
    )
    p_solve.set_defaults(func=cmd_solve)

    p_oracle = sub.add_parser("oracle", help="cross-check against brute force")
    p_oracle.add_argument("file")
    p_oracle.add_argument("--max-n", type=int, default=12)
    p_oracle.set_defaults(func=cmd_oracle)

    p_random = sub.add_parser("random", help="generate random connected graphs")
    p_random.add_argument("--n", type=int, required=True)
    kind = p_random.add_mutually_exclusive_group(required=True)
    kind.add_argument("--p", type=float)
    kind.add_argument("--m", type=int)
    p_random.add_argument("--seed", type=int, required=True)
    p_random.add_argument("--count", type=int, default=1)
    p_random.set_defaults(func=cmd_random)

    p_bench = sub.add_parser("bench", help="timing table at m = 3n")
    p_bench.add_argument("--sizes", required=True, help="comma-separated sizes")
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def run() -> None:
    raise SystemExit(main())
