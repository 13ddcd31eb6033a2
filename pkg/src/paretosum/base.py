"""Base Pareto-sum algorithms: brute force (BF), binary search (BS), the
engineered priority variant (PBS), heap-based sort & compare (SC), and the
known-k Kirkpatrick-Seidel baseline (KS).

All share the contract (a, b, sink) -> k: the distinct non-dominated points
of the pairwise-sum matrix are emitted to the sink in strictly increasing
lexicographic order. BF/BS/PBS/KS buffer survivors and emit once sorted; SC
streams in order with an O(n_a + n_b) frontier heap.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .core import ParetoSet, PointSink
from .hull import convex_seed

logger = logging.getLogger(__name__)

_SC_CHUNK = 1 << 16


@dataclass
class AlgoStats:
    """Per-run instrumentation counters (read-only to callers)."""

    checks: int = 0          # candidate-level dominance checks
    oracle_calls: int = 0    # range-minimum oracle invocations
    cells: int = 0           # cells inspected / compared / materialized
    heap_peak: int = 0       # frontier-heap peak size (SC and hybrid fallback)
    frontier_peak: int = 0   # peak stored points across ND-tree structures
    rebuilds: int = 0        # ND-tree rebuilds
    jumps: int = 0           # sweep-oracle delta jumps taken
    skipped: int = 0         # PBS cells skipped via dominated intervals
    level_peaks: list = field(default_factory=list)  # DND per-level peaks


def _emit_sorted_unique(xs: np.ndarray, ys: np.ndarray, sink: PointSink) -> int:
    """Sort buffered survivors lexicographically, drop duplicate values, emit."""
    if len(xs) == 0:
        return 0
    order = np.lexsort((ys, xs))
    xs = xs[order]
    ys = ys[order]
    keep = np.empty(len(xs), dtype=bool)
    keep[0] = True
    keep[1:] = (np.diff(xs) != 0) | (np.diff(ys) != 0)
    xs = xs[keep]
    ys = ys[keep]
    sink.emit_many(xs, ys)
    return len(xs)


def brute_force(a: ParetoSet, b: ParetoSet, sink: PointSink, *, stats: AlgoStats | None = None) -> int:
    """Pairwise-comparison Pareto sum; candidates enumerated column-major."""
    if len(a) == 0 or len(b) == 0:
        return 0
    _kernels.warm()
    xs, ys, checks, cells = _kernels.brute_force_kernel(a.xs, a.ys, b.xs, b.ys)
    if stats is not None:
        stats.checks = int(checks)
        stats.cells = int(cells)
    return _emit_sorted_unique(xs, ys, sink)


def binary_search(a: ParetoSet, b: ParetoSet, sink: PointSink, *, stats: AlgoStats | None = None) -> int:
    """Per-candidate dominance checks via two binary searches per column."""
    if len(a) == 0 or len(b) == 0:
        return 0
    _kernels.warm()
    xs, ys, checks = _kernels.binary_search_kernel(a.xs, a.ys, b.xs, b.ys)
    if stats is not None:
        stats.checks = int(checks)
    return _emit_sorted_unique(xs, ys, sink)


def priority_binary_search(
    a: ParetoSet, b: ParetoSet, sink: PointSink, *, stats: AlgoStats | None = None
) -> int:
    """BS with convex-seed bootstrapping.

    The convex seed C' is confirmed output from the start; its points mark
    per-column dominated row intervals (one, the longest, per column), and
    cells inside a stored interval are skipped without a dominance check.
    Cells in rows/columns holding C' cells are visited first.
    """
    if len(a) == 0 or len(b) == 0:
        return 0
    _kernels.warm()
    seed, provenance = convex_seed(a, b)
    seed_i = np.fromiter((i for i, _ in provenance), dtype=np.int64, count=len(provenance))
    seed_j = np.fromiter((j for _, j in provenance), dtype=np.int64, count=len(provenance))
    xs, ys, checks, skipped = _kernels.priority_binary_search_kernel(
        a.xs, a.ys, b.xs, b.ys, seed_i, seed_j
    )
    if stats is not None:
        stats.checks = int(checks)
        stats.skipped = int(skipped)
    return _emit_sorted_unique(
        np.concatenate([xs, seed.xs]), np.concatenate([ys, seed.ys]), sink
    )


def sort_compare(a: ParetoSet, b: ParetoSet, sink: PointSink, *, stats: AlgoStats | None = None) -> int:
    """Heap-based sorted traversal of the matrix, streaming emissions.

    The frontier heap holds at most one cell per column (never more than
    n_b entries); a popped cell is emitted unless dominated by or equal to
    the last emission, and its column is advanced past cells the last
    emission dominates before the successor is pushed.
    """
    na, nb = len(a), len(b)
    if na == 0 or nb == 0:
        return 0
    _kernels.warm()
    hx = np.empty(nb, np.int64)
    hy = np.empty(nb, np.int64)
    hi = np.empty(nb, np.int64)
    hj = np.empty(nb, np.int64)
    state = np.zeros(5, np.int64)
    state[0] = _kernels.sort_compare_init(a.xs, a.ys, b.xs, b.ys, hx, hy, hi, hj)
    state[3] = state[0]
    chunk = min(_SC_CHUNK, na * nb)
    out_x = np.empty(chunk, np.int64)
    out_y = np.empty(chunk, np.int64)
    k = 0
    while state[0] > 0:
        m = _kernels.sort_compare_chunk(a.xs, a.ys, b.xs, b.ys, hx, hy, hi, hj, state, out_x, out_y)
        if m:
            sink.emit_many(out_x[:m], out_y[:m])
            k += m
    if stats is not None:
        stats.heap_peak = int(state[3])
        stats.cells = int(state[4])
    return k


def kirkpatrick_seidel(
    a: ParetoSet,
    b: ParetoSet,
    k_hint: int,
    sink: PointSink,
    *,
    stats: AlgoStats | None = None,
) -> int:
    """Known-k marriage-before-conquest baseline over the materialized matrix.

    All cells are materialized (the deliberate Theta(n^2)-space trade-off);
    recursion splits at the exact x-median, prunes the right side with the
    left side's lowest-y bridge point, stops when a side is fully dominated,
    and processes blocks of roughly N / k_hint cells by sorting. A wrong
    k_hint only changes the block size, never the output.
    """
    na, nb = len(a), len(b)
    if na == 0 or nb == 0:
        return 0
    X = (a.xs[:, None] + b.xs[None, :]).ravel()
    Y = (a.ys[:, None] + b.ys[None, :]).ravel()
    total = len(X)
    base = max(32, -(-total // max(1, k_hint)))
    out_parts_x: list[np.ndarray] = []
    out_parts_y: list[np.ndarray] = []

    def emit_block(bx: np.ndarray, by: np.ndarray) -> None:
        order = np.lexsort((by, bx))
        bx = bx[order]
        by = by[order]
        running = np.minimum.accumulate(by)
        keep = np.empty(len(by), dtype=bool)
        keep[0] = True
        keep[1:] = by[1:] < running[:-1]
        out_parts_x.append(bx[keep])
        out_parts_y.append(by[keep])

    stack = [(X, Y)]
    while stack:
        bx, by = stack.pop()
        n = len(bx)
        if n == 0:
            continue
        if n <= base:
            emit_block(bx, by)
            continue
        xm = np.partition(bx, n // 2)[n // 2]
        left = bx <= xm
        if left.all():
            # x-median equals the maximum: no strict split exists
            emit_block(bx, by)
            continue
        bridge = by[left].min()
        keep_right = ~left & (by < bridge)
        # process left before right so collected blocks stay in x order
        stack.append((bx[keep_right], by[keep_right]))
        stack.append((bx[left], by[left]))

    xs = np.concatenate(out_parts_x) if out_parts_x else np.empty(0, np.int64)
    ys = np.concatenate(out_parts_y) if out_parts_y else np.empty(0, np.int64)
    # blocks are x-disjoint and bridge-pruned: concatenation is the final
    # staircase already; duplicate values can only sit inside one block
    k = 0
    if len(xs):
        sink.emit_many(xs, ys)
        k = len(xs)
    if stats is not None:
        stats.cells = total
    if k != k_hint:
        logger.warning("kirkpatrick_seidel: k_hint=%d but true output size is %d", k_hint, k)
    return k
