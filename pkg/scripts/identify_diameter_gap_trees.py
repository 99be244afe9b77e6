#!/usr/bin/env python3
"""Re-derive the diameter n-3 trees behind the closed-form coefficients.

For each n, enumerate every tree of diameter n-3 and report which
isomorphism classes have coefficient vectors equal to the closed forms.
The fixture shapes in treelap.analysis.near_maximal_diameter_trees were
frozen from this search; rerunning it should print exactly one hit per
variant, matching the fixtures.
"""
from __future__ import annotations

import argparse

from treelap import canonical_code, enumerate_filtered, format_tree, laplacian_coeffs
from treelap.analysis import closed_form_coeff, near_maximal_diameter_trees


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--min-n", type=int, default=9)
    ap.add_argument("--max-n", type=int, default=12)
    ap.add_argument("--force", action="store_true")
    args = ap.parse_args()

    ok = True
    for n in range(args.min_n, args.max_n + 1):
        targets = {
            "T1": tuple(closed_form_coeff("T1", n, k) for k in range(n + 1)),
            "T2": tuple(closed_form_coeff("T2", n, k) for k in range(n + 1)),
        }
        hits: dict[str, list] = {"T1": [], "T2": []}
        for t in enumerate_filtered(n, diameter_eq=n - 3, force=args.force):
            vec = laplacian_coeffs(t)
            for name, want in targets.items():
                if vec == want:
                    hits[name].append(t)
        fixtures = near_maximal_diameter_trees(n)
        for name in ("T1", "T2"):
            codes = sorted(canonical_code(t) for t in hits[name])
            fix = canonical_code(fixtures[name])
            status = "ok" if codes == [fix] else "MISMATCH"
            if status != "ok":
                ok = False
            print(f"n={n} {name}: {len(codes)} hit(s) {status}")
            for t in hits[name]:
                print(f"  {format_tree(t)}")
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
