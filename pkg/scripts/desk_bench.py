#!/usr/bin/env python3
"""Desk-scale benchmark study: runtime ordering across the portfolio and
the SC vs SSS size sweep, written as bench CSVs.

Usage:
    python scripts/desk_bench.py [--out DIR] [--quick]

Produces portfolio.csv (all algorithms, moderate sizes, oracle-verified)
and scaling.csv (SC vs SSS on larger instances). Expect a few minutes;
--quick trims sizes for a smoke run.
"""

import argparse
import pathlib
import sys

from paretosum.bench import bench_matrix, read_csv


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="results", help="output directory")
    parser.add_argument("--quick", action="store_true")
    args = parser.parse_args()

    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    portfolio_sizes = [50, 100] if args.quick else [100, 200, 500]
    scaling_sizes = [500, 1000] if args.quick else [1000, 2000, 4000, 8000]
    seeds = [0, 1, 2]

    gens = [
        ("sorted", "uniform"),
        ("sorted", "gaussian"),
        ("sorted", "exponential"),
        ("curve", "uniform"),
        ("linear", "uniform"),
    ]

    print("portfolio run (all algorithms, oracle-verified)...", file=sys.stderr)
    bench_matrix(
        ["bf", "bs", "pbs", "sc", "ks", "sbs", "sss", "hybrid", "ptree", "snd", "dnd"],
        gens,
        portfolio_sizes,
        seeds,
        str(out / "portfolio.csv"),
        verify=True,
    )

    print("scaling run (SC vs SSS vs hybrid)...", file=sys.stderr)
    bench_matrix(
        ["sc", "sss", "hybrid"],
        [("sorted", "uniform"), ("sorted", "gaussian"), ("sorted", "shifted"), ("curve", "uniform")],
        scaling_sizes,
        seeds,
        str(out / "scaling.csv"),
    )

    for name in ("portfolio.csv", "scaling.csv"):
        _, summaries = read_csv(str(out / name))
        print(f"\n{name}: median times")
        for row in summaries:
            algo, gen, dist, n = row[0], row[1], row[2], row[3]
            time_ms = int(row[7]) / 1e6
            print(f"  {algo:7s} {gen}/{dist:12s} n={n:>6s}  {time_ms:10.2f} ms  k={row[6]}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
