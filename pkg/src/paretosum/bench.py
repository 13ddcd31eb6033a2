"""Benchmark harness: timed runs, verification, and CSV output.

Timing wraps the algorithm call only (file I/O excluded) on the monotonic
clock; an optional warm-up run into a counting sink is discarded first.
Space is reported through the logical counters carried by AlgoStats, not
OS memory probes. Verification compares against the full-matrix oracle.
"""

from __future__ import annotations

import csv
import statistics
import time
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from . import _kernels
from .base import AlgoStats, sort_compare
from .core import CollectSink, CountSink, ParetoSet, PointSink
from .generators import generate_pair
from .oracles import reference_points
from .registry import run_algorithm

CSV_HEADER = (
    "algo,gen,dist,n_a,n_b,seed,k,time_ns,checks,oracle_calls,cells,"
    "heap_peak,frontier_peak,rebuilds,verified"
)
_COLUMNS = CSV_HEADER.split(",")


@dataclass
class RunRecord:
    """One timed algorithm execution plus its counters."""

    algo: str
    gen: str
    dist: str
    n_a: int
    n_b: int
    seed: int
    k: int
    time_ns: int
    checks: int = 0
    oracle_calls: int = 0
    cells: int = 0
    heap_peak: int = 0
    frontier_peak: int = 0
    rebuilds: int = 0
    verified: bool = False
    # reported by `run` for KS when the k_hint had to be precomputed;
    # deliberately not part of the CSV schema
    khint_time_ns: Optional[int] = None

    def csv_row(self) -> list[str]:
        vals = []
        for name in _COLUMNS:
            v = getattr(self, name)
            vals.append(str(v).lower() if isinstance(v, bool) else str(v))
        return vals

    @classmethod
    def from_csv_row(cls, row: Sequence[str]) -> "RunRecord":
        kv = dict(zip(_COLUMNS, row))
        ints = {name: int(kv[name]) for name in _COLUMNS if name not in ("algo", "gen", "dist", "verified")}
        return cls(
            algo=kv["algo"],
            gen=kv["gen"],
            dist=kv["dist"],
            verified=kv["verified"] == "true",
            **ints,
        )


def time_algorithm(
    algo: str,
    a: ParetoSet,
    b: ParetoSet,
    sink: PointSink,
    *,
    delta: Optional[int] = None,
    k_hint: Optional[int] = None,
    warmup: bool = True,
) -> tuple[int, int, AlgoStats, Optional[int]]:
    """Run one algorithm; returns (k, time_ns, stats, khint_time_ns).

    KS without an explicit k_hint gets one from a separately timed sort &
    compare counting pass, reported as khint_time_ns.
    """
    _kernels.warm()
    khint_time = None
    if algo == "ks" and k_hint is None:
        counter = CountSink()
        t0 = time.perf_counter_ns()
        sort_compare(a, b, counter)
        khint_time = time.perf_counter_ns() - t0
        k_hint = counter.count
    if warmup:
        run_algorithm(algo, a, b, CountSink(), delta=delta, k_hint=k_hint)
    stats = AlgoStats()
    t0 = time.perf_counter_ns()
    k = run_algorithm(algo, a, b, sink, delta=delta, k_hint=k_hint, stats=stats)
    elapsed = time.perf_counter_ns() - t0
    return k, elapsed, stats, khint_time


def run_one(
    algo: str,
    a: ParetoSet,
    b: ParetoSet,
    *,
    gen: str = "-",
    dist: str = "-",
    seed: int = 0,
    delta: Optional[int] = None,
    k_hint: Optional[int] = None,
    verify: bool = False,
    warmup: bool = True,
    sink: Optional[PointSink] = None,
) -> RunRecord:
    """Execute one benchmark cell; with verify, check oracle equality."""
    collect = CollectSink() if verify and sink is None else sink
    out = collect if collect is not None else CountSink()
    k, elapsed, stats, khint_time = time_algorithm(
        algo, a, b, out, delta=delta, k_hint=k_hint, warmup=warmup
    )
    verified = False
    if verify:
        if not isinstance(out, CollectSink):
            raise ValueError("verification needs a collecting sink")
        verified = out.result() == reference_points(a, b)
    return RunRecord(
        algo=algo,
        gen=gen,
        dist=dist,
        n_a=len(a),
        n_b=len(b),
        seed=seed,
        k=k,
        time_ns=elapsed,
        checks=stats.checks,
        oracle_calls=stats.oracle_calls,
        cells=stats.cells,
        heap_peak=stats.heap_peak,
        frontier_peak=stats.frontier_peak,
        rebuilds=stats.rebuilds,
        verified=verified,
        khint_time_ns=khint_time,
    )


def _median_int(values: Iterable[int]) -> int:
    return int(round(statistics.median(values)))


def summary_row(records: list[RunRecord]) -> list[str]:
    """Median-of-seeds summary for records sharing (algo, gen, dist, n)."""
    first = records[0]
    med = {
        name: _median_int(getattr(r, name) for r in records)
        for name in ("k", "time_ns", "checks", "oracle_calls", "cells", "heap_peak", "frontier_peak", "rebuilds")
    }
    return [
        first.algo,
        first.gen,
        first.dist,
        str(first.n_a),
        str(first.n_b),
        "median",
        str(med["k"]),
        str(med["time_ns"]),
        str(med["checks"]),
        str(med["oracle_calls"]),
        str(med["cells"]),
        str(med["heap_peak"]),
        str(med["frontier_peak"]),
        str(med["rebuilds"]),
        str(all(r.verified for r in records)).lower(),
    ]


def bench_matrix(
    algos: Sequence[str],
    gens: Sequence[tuple[str, str]],
    sizes: Sequence[int],
    seeds: Sequence[int],
    csv_path: str,
    *,
    delta: Optional[int] = None,
    verify: bool = False,
    warmup: bool = True,
    scale: int = 10**6,
    progress=None,
) -> list[RunRecord]:
    """Run the full benchmark matrix, appending detail rows as they finish
    (partial results survive interruption) and median summary rows at the
    end of each (algo, generator, size) group.
    """
    records: list[RunRecord] = []
    with open(csv_path, "w", encoding="utf-8", newline="") as fp:
        writer = csv.writer(fp)
        writer.writerow(_COLUMNS)
        fp.flush()
        try:
            for family, dist in gens:
                for n in sizes:
                    instances = {s: generate_pair(family, n, s, dist, scale) for s in seeds}
                    for algo in algos:
                        group: list[RunRecord] = []
                        for s in seeds:
                            a, b = instances[s]
                            rec = run_one(
                                algo,
                                a,
                                b,
                                gen=family,
                                dist=dist,
                                seed=s,
                                delta=delta,
                                verify=verify,
                                warmup=warmup,
                            )
                            group.append(rec)
                            records.append(rec)
                            writer.writerow(rec.csv_row())
                            fp.flush()
                            if progress is not None:
                                progress(rec)
                        writer.writerow(summary_row(group))
                        fp.flush()
        except KeyboardInterrupt:
            fp.flush()
            raise
    return records


def read_csv(path: str) -> tuple[list[RunRecord], list[list[str]]]:
    """Parse a bench CSV back into detail records and raw summary rows."""
    details: list[RunRecord] = []
    summaries: list[list[str]] = []
    with open(path, "r", encoding="utf-8", newline="") as fp:
        reader = csv.reader(fp)
        header = next(reader)
        if header != _COLUMNS:
            raise ValueError(f"{path}: unexpected CSV header")
        for row in reader:
            if row[_COLUMNS.index("seed")] == "median":
                summaries.append(row)
            else:
                details.append(RunRecord.from_csv_row(row))
    return details, summaries
