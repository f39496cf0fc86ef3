"""Run the theorem sweep over all 2-connected graphs up to a given order and write the report."""

from __future__ import annotations

import argparse
import json

from circumkit.sweep import SweepConfig, run_sweep


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=9)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--keep", choices=["all", "exceptional"], default="exceptional")
    ap.add_argument("--strict-hosts", action="store_true")
    ap.add_argument("--out-dir", default="reports")
    args = ap.parse_args()

    cfg = SweepConfig(n_max=args.n_max, workers=args.workers, keep=args.keep, strict_hosts=args.strict_hosts)
    rep = run_sweep(args.n_max, cfg)
    paths = rep.write(args.out_dir, f"sweep_n{args.n_max}" + ("_strict" if args.strict_hosts else ""))
    print(json.dumps({"header": rep.header, "totals": rep.totals, "digest": rep.digest}, indent=1))
    for p in paths:
        print("wrote", p)
    return 1 if rep.violations or not rep.complete else 0


if __name__ == "__main__":
    raise SystemExit(main())
