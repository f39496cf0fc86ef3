"""Run the rooted-path lemma sweep for one or more (delta, order_max) pairs."""

from __future__ import annotations

import argparse

from circumkit.sweep import LemmaConfig, run_lemma_sweep


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("pairs", nargs="*", default=["2:6", "3:7"], help="delta:order_max (default 2:6 3:7)")
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out-dir", default="reports")
    args = ap.parse_args()

    status = 0
    for pair in args.pairs:
        delta, order = (int(t) for t in pair.split(":"))
        rep = run_lemma_sweep(delta, order, LemmaConfig(workers=args.workers))
        rep.write(args.out_dir, f"lemma_d{delta}_n{order}")
        print(f"delta={delta} order<={order}: {rep.totals['verdict']} "
              f"violations={rep.violations} {rep.header['status']} {rep.header['wall_time_s']}s")
        status |= bool(rep.violations or not rep.complete)
    return status


if __name__ == "__main__":
    raise SystemExit(main())
