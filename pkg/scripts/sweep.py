"""Run every check family over a range of n and write the per-check CSV.

    python scripts/sweep.py --to 60 --workers 4 --out results/sweep_2_60.csv
"""

import argparse
import sys
import time
from pathlib import Path

from gengraph.cli import CHECK_FAMILIES, SweepConfig, rows_to_csv, run_sweep, summarize


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--from", dest="n_min", type=int, default=2)
    ap.add_argument("--to", dest="n_max", type=int, default=60)
    ap.add_argument("--checks", default=",".join(CHECK_FAMILIES))
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out", type=Path, default=Path("results/sweep.csv"))
    args = ap.parse_args()

    config = SweepConfig(args.n_min, args.n_max, tuple(args.checks.split(",")), workers=args.workers)
    t0 = time.perf_counter()
    rows = run_sweep(config)
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(rows_to_csv(rows))

    for family, counts in summarize(rows).items():
        print(f"{family:20s} " + "  ".join(f"{k}={v}" for k, v in counts.items()))
    print(f"{len(rows)} rows in {time.perf_counter() - t0:.1f}s -> {args.out}")
    return 1 if any(r.status == "fail" for r in rows) else 0


if __name__ == "__main__":
    sys.exit(main())
