#!/usr/bin/env python3
"""Sweep every tree class at a given n and compare winners to the named families.

Reports, per class parameter, whether the family construction is the
simultaneous per-k extremum. The matched-tree family is checked in both
directions because its extremal role is maximal, not minimal, within a
fixed max-degree class; the minimizer column documents that.
"""
from __future__ import annotations

import argparse

from treelap import (
    balanced_starlike,
    broom,
    canonical_code,
    extremal_sweep,
    matched_starlike,
    mid_bundle_caterpillar,
)


def _mark(sweep, tree) -> str:
    return "yes" if canonical_code(tree) in sweep.simultaneous else "NO"


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=10)
    ap.add_argument("--force", action="store_true")
    args = ap.parse_args()
    n = args.n

    print("class,param,family,role,simultaneous")
    for d in range(2, n):
        sw = extremal_sweep(n, "diameter", d, mode="min", force=args.force)
        print(f"diameter,{d},mid_bundle_caterpillar,min,{_mark(sw, mid_bundle_caterpillar(n, d))}")
    for delta in range(2, n):
        sw = extremal_sweep(n, "max_degree", delta, mode="max", force=args.force)
        print(f"max_degree,{delta},broom,max,{_mark(sw, broom(n, delta))}")
    for k in range(3, n):
        sw = extremal_sweep(n, "starlike_legs", k, mode="min", force=args.force)
        print(f"starlike_legs,{k},balanced_starlike,min,{_mark(sw, balanced_starlike(n, k))}")
    if n % 2 == 0:
        for delta in range(2, n // 2 + 1):
            fam = matched_starlike(n, delta)
            lo = extremal_sweep(n, "matched_max_degree", delta, mode="min", force=args.force)
            hi = extremal_sweep(n, "matched_max_degree", delta, mode="max", force=args.force)
            print(f"matched_max_degree,{delta},matched_starlike,min,{_mark(lo, fam)}")
            print(f"matched_max_degree,{delta},matched_starlike,max,{_mark(hi, fam)}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
