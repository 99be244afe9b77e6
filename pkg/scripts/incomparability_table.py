#!/usr/bin/env python3
"""Regenerate the incomparable-pair table over a range of n.

Rows beyond the default guard (n > 12) need --force; n >= 15 takes
minutes even with --jobs, n >= 17 considerably longer.
"""
from __future__ import annotations

import argparse
import sys
import time

from treelap import classify_all


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--min-n", type=int, default=3)
    ap.add_argument("--max-n", type=int, default=12)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--force", action="store_true")
    args = ap.parse_args()

    print("n,trees,type1,type2,incomparable,percent,seconds")
    for n in range(args.min_n, args.max_n + 1):
        t0 = time.perf_counter()
        row = classify_all(n, jobs=args.jobs, force=args.force)
        dt = time.perf_counter() - t0
        print(
            f"{row.n},{row.trees},{row.type1},{row.type2},"
            f"{row.incomparable},{row.percent},{dt:.2f}"
        )
        sys.stdout.flush()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
