"""Command-line surface.

Exit statuses: 0 success (for `verify`: every candidate Confirmed),
2 unresolved candidates remain, 1 operational error.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import pipeline

CHECKPOINT_ROOT_ENV = "KNOTSIEVE_CHECKPOINT_ROOT"


def _default_checkpoint(crossings: int) -> str:
    root = os.environ.get(CHECKPOINT_ROOT_ENV, "checkpoints")
    return os.path.join(root, f"c{crossings}")


def cmd_gen_polyhedra(args) -> int:
    if args.max_vertices < 6:
        print("warning: no polyhedra below 6 vertices", file=sys.stderr)
    counts = pipeline.write_polyhedra(args.max_vertices, args.out)
    total = 0
    print("vertices  polyhedra")
    for v in sorted(counts):
        print(f"{v:>8}  {counts[v]:>9}")
        total += counts[v]
    print(f"   total  {total:>9}")
    return 0


def cmd_gen_tangles(args) -> int:
    counts = pipeline.write_tangles(
        args.max_crossings, args.out, trivializable_only=args.trivializable_only
    )
    print("crossings  classes  trivializable")
    tot = triv = 0
    for c in sorted(counts):
        n, t = counts[c]
        print(f"{c:>9}  {n:>7}  {t:>13}")
        tot += n
        triv += t
    print(f"    total  {tot:>7}  {triv:>13}")
    return 0


def cmd_verify(args) -> int:
    checkpoint = args.checkpoint or _default_checkpoint(args.crossings)
    status = pipeline.verify(
        args.crossings,
        args.polyhedra,
        args.tangles,
        checkpoint,
        workers=args.workers,
        out_path=args.out,
    )
    print(f"verify c={args.crossings}: exit {status}")
    return status


def cmd_stats(args) -> int:
    problems = pipeline.write_stats(args.runs, args.csv)
    for p in problems:
        print(p, file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knotsieve",
        description="Sieve knot diagrams for unit-Jones candidates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-polyhedra", help="enumerate Conway polyhedra")
    p.add_argument("--max-vertices", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen_polyhedra)

    p = sub.add_parser("gen-tangles", help="enumerate algebraic tangle classes")
    p.add_argument("--max-crossings", type=int, required=True)
    p.add_argument("--trivializable-only", action="store_true")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen_tangles)

    p = sub.add_parser("verify", help="run the sieve at one crossing count")
    p.add_argument("--crossings", type=int, required=True)
    p.add_argument("--polyhedra", required=True)
    p.add_argument("--tangles", required=True)
    p.add_argument("--checkpoint", default=None,
                   help=f"batch ledger dir (default from ${CHECKPOINT_ROOT_ENV})")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("stats", help="collect run statistics to CSV")
    p.add_argument("--runs", nargs="+", required=True)
    p.add_argument("--csv", required=True)
    p.set_defaults(func=cmd_stats)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
