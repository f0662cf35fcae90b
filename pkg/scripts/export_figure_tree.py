#!/usr/bin/env python3
"""Dump the fixed-genus tree as DOT, ready for graphviz.

    python scripts/export_figure_tree.py --genus 6 --out t6.dot
    dot -Tpng -O t6.dot
"""

import argparse
import sys

from semiforge import TooLarge, export_tree_dot


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--genus", type=int, default=6)
    parser.add_argument("--out", default="-", help="output path, - for stdout")
    parser.add_argument("--node-cap", type=int, default=100_000)
    args = parser.parse_args()

    try:
        text = export_tree_dot(args.genus, node_cap=args.node_cap)
    except TooLarge as exc:
        print(str(exc), file=sys.stderr)
        return 4
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(f"wrote {args.out}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
