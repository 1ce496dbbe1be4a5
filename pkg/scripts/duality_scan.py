#!/usr/bin/env python3
"""Scan duality behaviour over a range of n.

For each n and each divisor k, checks that the (n, k) and (n, n/k) quotients
have identical Betti vectors and per-partition component counts, and counts
the partitions whose singularity structure genuinely differs between the two
sides.  Example:

    python scripts/duality_scan.py --max-n 24
"""

import argparse
import sys

from extquot.numtheory import divisors
from extquot.topology import duality_report


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=20)
    parser.add_argument("--verbose", action="store_true", help="list the differing partitions")
    args = parser.parse_args()

    failures = 0
    for n in range(1, args.max_n + 1):
        for k in divisors(n):
            if k > n // k:
                continue  # each dual pair once
            report = duality_report(n, k)
            diffs = report.partitions_with_singularity_differences()
            status = "ok" if report.ok else "MISMATCH"
            if not report.ok:
                failures += 1
            line = f"n={n:3d} k={k:2d} <-> {report.k_dual:2d}: {status}, {len(diffs)} partition(s) with differing singularities"
            print(line)
            if args.verbose and diffs:
                print("        " + ", ".join(str(p) for p in diffs))
    if failures:
        print(f"{failures} duality failure(s)", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
