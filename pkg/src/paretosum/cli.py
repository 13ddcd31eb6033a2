"""Command-line front end: generate instances, run algorithms, verify
against the oracle, and benchmark with CSV output.

Subcommands: generate, run, bench, verify. Pass --delta sqrt (default) to
use the square-root skip threshold for the sweep oracle.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from .bench import bench_matrix, run_one
from .core import CheckingSink, CollectSink, WriterSink
from .generators import DISTRIBUTIONS, FAMILIES, GenSpec, generate
from .io import read_pareto_set, write_pareto_set
from .oracles import reference_points
from .registry import ALGORITHMS
from .successive import default_delta


def _parse_delta(value: str, n_a: int, n_b: int) -> Optional[int]:
    if value == "sqrt":
        return default_delta(n_a, n_b)
    delta = int(value)
    if delta < 1:
        raise SystemExit("--delta must be a positive integer or 'sqrt'")
    return delta


def cmd_generate(args: argparse.Namespace) -> int:
    spec = GenSpec(
        family=args.gen,
        n=args.n,
        seed=args.seed,
        distribution=args.dist,
        scale=args.scale,
        role=args.role,
    )
    ps = generate(spec)
    try:
        write_pareto_set(args.out, ps, header=spec.header_lines())
    except OSError as exc:
        raise SystemExit(f"cannot write {args.out}: {exc}") from None
    print(f"wrote {len(ps)} points to {args.out}")
    return 0


def _load_pair(args: argparse.Namespace):
    try:
        return read_pareto_set(args.file_a), read_pareto_set(args.file_b)
    except (OSError, ValueError) as exc:
        raise SystemExit(str(exc)) from None


def cmd_run(args: argparse.Namespace) -> int:
    a, b = _load_pair(args)
    delta = _parse_delta(args.delta, len(a), len(b))
    sink = None
    if args.stream:
        if args.verify:
            raise SystemExit("--stream and --verify are mutually exclusive")
        sink = WriterSink(sys.stdout)
    rec = run_one(
        args.algo,
        a,
        b,
        seed=args.seed,
        delta=delta,
        k_hint=args.khint,
        verify=args.verify,
        sink=sink,
    )
    out = sys.stderr if args.stream else sys.stdout
    print(f"algo={rec.algo} n_a={rec.n_a} n_b={rec.n_b} k={rec.k} time_ns={rec.time_ns}", file=out)
    print(
        f"counters checks={rec.checks} oracle_calls={rec.oracle_calls} cells={rec.cells} "
        f"heap_peak={rec.heap_peak} frontier_peak={rec.frontier_peak} rebuilds={rec.rebuilds}",
        file=out,
    )
    if rec.khint_time_ns is not None:
        print(f"khint_time_ns={rec.khint_time_ns} (sort & compare precomputation)", file=out)
    if args.verify:
        print(f"verified={str(rec.verified).lower()}", file=out)
        return 0 if rec.verified else 1
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    a, b = _load_pair(args)
    delta = _parse_delta(args.delta, len(a), len(b))
    sink = CollectSink()
    ALGORITHMS[args.algo](a, b, CheckingSink(sink), delta=delta)
    expected = reference_points(a, b)
    got = sink.result()
    if got == expected:
        print(f"PASS {args.algo}: k={len(got)} matches the reference oracle")
        return 0
    print(f"FAIL {args.algo}: k={len(got)} differs from oracle k={len(expected)}")
    return 1


def cmd_bench(args: argparse.Namespace) -> int:
    algos = args.algo or list(ALGORITHMS)
    gens = [(g, args.dist if g == "sorted" else "uniform") for g in (args.gen or ["sorted"])]
    sizes = args.n or [100]
    seeds = args.seed or [0, 1, 2]
    delta = None
    if args.delta != "sqrt":
        delta = _parse_delta(args.delta, 0, 0)

    def progress(rec):
        print(
            f"{rec.algo} {rec.gen}/{rec.dist} n={rec.n_a} seed={rec.seed}: "
            f"k={rec.k} time={rec.time_ns / 1e6:.2f} ms",
            file=sys.stderr,
        )

    bench_matrix(
        algos,
        gens,
        sizes,
        seeds,
        args.csv,
        delta=delta,
        verify=args.verify,
        warmup=not args.no_warmup,
        progress=progress if not args.quiet else None,
    )
    print(f"bench results written to {args.csv}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="paretosum", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a generated .ps instance file")
    g.add_argument("--gen", choices=FAMILIES, required=True)
    g.add_argument("--dist", choices=DISTRIBUTIONS, default="uniform")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--scale", type=int, default=10**6)
    g.add_argument("--role", choices=("a", "b"), default="a", help="pair role for shifted/linear")
    g.add_argument("--out", required=True)
    g.set_defaults(func=cmd_generate)

    r = sub.add_parser("run", help="run one algorithm on an instance pair")
    r.add_argument("--algo", choices=sorted(ALGORITHMS), required=True)
    r.add_argument("file_a")
    r.add_argument("file_b")
    r.add_argument("--delta", default="sqrt", help="sweep skip threshold (integer or 'sqrt')")
    r.add_argument("--seed", type=int, default=0, help="seed label recorded in the output")
    r.add_argument("--khint", type=int, default=None, help="known output size for ks")
    r.add_argument("--stream", action="store_true", help="stream points to stdout unbuffered")
    r.add_argument("--verify", action="store_true", help="also check oracle equality")
    r.set_defaults(func=cmd_run)

    v = sub.add_parser("verify", help="check one algorithm against the oracle")
    v.add_argument("--algo", choices=sorted(ALGORITHMS), required=True)
    v.add_argument("file_a")
    v.add_argument("file_b")
    v.add_argument("--delta", default="sqrt")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="run a benchmark matrix and write CSV")
    b.add_argument("--algo", action="append", choices=sorted(ALGORITHMS), help="repeatable")
    b.add_argument("--gen", action="append", choices=FAMILIES, help="repeatable")
    b.add_argument("--dist", choices=DISTRIBUTIONS, default="uniform")
    b.add_argument("--n", action="append", type=int, help="repeatable")
    b.add_argument("--seed", action="append", type=int, help="repeatable")
    b.add_argument("--delta", default="sqrt")
    b.add_argument("--verify", action="store_true", help="verify every run against the oracle")
    b.add_argument("--no-warmup", action="store_true")
    b.add_argument("--quiet", action="store_true")
    b.add_argument("--csv", required=True)
    b.set_defaults(func=cmd_bench)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
