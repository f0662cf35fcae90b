"""Command-line front end.

Standard output carries only machine-parseable results (CSV, JSON, DOT,
or the transform chain); progress notes go to standard error.  Repeated
runs with identical arguments produce byte-identical output regardless
of the worker count.

Exit codes:
    0  success / verification passed
    1  verification found a counterexample
    2  bad flags or unparsable input
    3  gap list whose complement is not additively closed
    4  tree export exceeds the node cap
    5  output file could not be written
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Optional, Sequence

from . import analytics, closedsets, tree
from .semigroup import NotClosed, Semigroup

WORKERS_ENV = "SEMIFORGE_WORKERS"

_VERIFY_CHECKS = {
    "conjecture": lambda gmax, workers: analytics.check_conjecture(gmax, workers=workers),
    "bijection": lambda gmax, workers: analytics.verify_bijection(gmax),
    "intervals": lambda gmax, workers: analytics.verify_interval_theorem(gmax),
    "parity": lambda gmax, workers: analytics.verify_parity_lemma(gmax),
    "trees": lambda gmax, workers: analytics.verify_tree_relations(gmax),
}


def _workers_from(args: argparse.Namespace) -> int:
    if args.workers is not None:
        return args.workers
    env = os.environ.get(WORKERS_ENV)
    return int(env) if env else 0


def _add_workers_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--workers",
        type=int,
        default=None,
        metavar="N",
        help=f"worker processes, 0 = one per CPU (default; ${WORKERS_ENV} overrides)",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semiforge",
        description="numerical semigroup trees, the ordinarization transform, and exact count tables",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="counts by genus and ordinarization number")
    p.add_argument("--gmax", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json", "plain"), default="csv")
    _add_workers_flag(p)

    p = sub.add_parser("transform", help="print the ordinarization chain of a gap list")
    p.add_argument("gaps", help='comma-separated gap list, e.g. "1,2,3,6,7,11"')

    p = sub.add_parser("fseq", help="closed-set counting sequence")
    p.add_argument("--omega-max", type=int, required=True)
    _add_workers_flag(p)

    p = sub.add_parser("verify", help="run one verification harness")
    p.add_argument("--check", choices=sorted(_VERIFY_CHECKS), required=True)
    p.add_argument("--gmax", type=int, required=True)
    _add_workers_flag(p)

    p = sub.add_parser("tree", help="DOT export of the fixed-genus tree")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--dot", required=True, metavar="PATH")
    p.add_argument("--node-cap", type=int, default=100_000)
    return parser


def _cmd_table(args: argparse.Namespace) -> int:
    workers = _workers_from(args)
    started = time.monotonic()
    matrix = tree.count_matrix(args.gmax, workers=workers)
    print(f"counted genus <= {args.gmax} in {time.monotonic() - started:.1f}s", file=sys.stderr)
    if args.format == "csv":
        sys.stdout.write(matrix.to_csv())
    elif args.format == "json":
        print(json.dumps(matrix.to_json_obj()))
    else:
        for g, row in enumerate(matrix.rows):
            print(f"g={g}: " + " ".join(map(str, row)))
    return 0


def _cmd_transform(args: argparse.Namespace) -> int:
    try:
        s = Semigroup.from_gap_string(args.gaps)
    except NotClosed as exc:
        a, b = exc.witness
        print(f"not a numerical semigroup: witness {a} + {b} = {a + b} is a gap", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"cannot parse gap list: {exc}", file=sys.stderr)
        return 2
    chain = s.ordinarization_chain()
    for step in chain:
        print(step.gap_string())
    print(f"r={len(chain) - 1}")
    return 0


def _cmd_fseq(args: argparse.Namespace) -> int:
    if args.omega_max < 0:
        print("--omega-max must be non-negative", file=sys.stderr)
        return 2
    workers = _workers_from(args)
    print("omega,f")
    for w in range(args.omega_max + 1):
        print(f"{w},{closedsets.f_value(w, workers=workers)}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    report = _VERIFY_CHECKS[args.check](args.gmax, _workers_from(args))
    print(json.dumps(report.as_json_dict()))
    return 0 if report.passed else 1


def _cmd_tree(args: argparse.Namespace) -> int:
    try:
        text = tree.export_tree_dot(args.genus, node_cap=args.node_cap)
    except tree.TooLarge as exc:
        print(str(exc), file=sys.stderr)
        return 4
    try:
        with open(args.dot, "w") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"cannot write {args.dot}: {exc}", file=sys.stderr)
        return 5
    print(f"wrote {args.dot}", file=sys.stderr)
    return 0


_HANDLERS = {
    "table": _cmd_table,
    "transform": _cmd_transform,
    "fseq": _cmd_fseq,
    "verify": _cmd_verify,
    "tree": _cmd_tree,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    return _HANDLERS[args.command](args)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":  # pragma: no cover
    main()
