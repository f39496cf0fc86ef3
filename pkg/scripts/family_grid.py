"""Measure (min degree, clique number, circumference) of every family instance
and compare with the claimed triple; prints per-family counts and each mismatch."""

from __future__ import annotations

import argparse
from collections import Counter

from circumkit import families as fam
from circumkit.classify import THEOREM_FAMILIES, enumerate_feasible_params
from circumkit.graph import min_degree
from circumkit.solvers import circumference, clique_number


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=12)
    ap.add_argument("--n-max-g23", type=int, default=10, help="order cap for G2/G3")
    ap.add_argument("-q", "--quiet", action="store_true", help="counts only")
    args = ap.parse_args()

    seen, bad = Counter(), Counter()
    for family in THEOREM_FAMILIES:
        cap = args.n_max_g23 if family in ("G2", "G3") else args.n_max
        for n in range(3, cap + 1):
            for p in enumerate_feasible_params(n, family):
                try:
                    g, parts = fam.build(p)
                except fam.FilterRejected:
                    continue
                seen[family] += 1
                got = (min_degree(g), clique_number(g)[0], circumference(g)[0])
                want = fam.claimed_triple(p)
                if got != want:
                    bad[family] += 1
                    if not args.quiet:
                        print(f"{p.label()}: measured {got}, claimed {want}  {'; '.join(parts.notes)}")
    for family in THEOREM_FAMILIES:
        print(f"{family:4s} {seen[family]:5d} instances {bad[family]:4d} mismatches")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
