#!/usr/bin/env python3
"""Monotonicity scan: does any per-depth count drop from genus g to g+1?

Prints one line per genus with the full count row, then the verdict.
Exit code 1 if a drop is found (none is known in the scanned range).
"""

import argparse
import sys

from semiforge import check_conjecture, count_matrix


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--gmax", type=int, default=30)
    parser.add_argument("--workers", type=int, default=0)
    args = parser.parse_args()

    matrix = count_matrix(args.gmax, workers=args.workers)
    for g in range(args.gmax + 1):
        row = matrix.row(g)
        print(f"g={g:>3}  n_g={sum(row):>10}  {' '.join(map(str, row))}")
    report = check_conjecture(args.gmax, workers=args.workers)
    print(f"monotone through g={args.gmax}: {report.passed}")
    if not report.passed:
        print(report.counterexample, file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
