"""Output-sensitive successive algorithms built on range-minimum oracles.

The driver discovers the Pareto sum one point at a time in increasing
lexicographic order: after emitting p, the next point is the smallest matrix
cell in [p.x, inf) x (-inf, p.y). SBS backs the oracle with per-column
binary searches, SSS with a single monotone staircase sweep; the sweep
supports a skip threshold delta for jumping over dead rows and columns.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from . import _kernels
from .base import AlgoStats, sort_compare
from .core import MinkowskiView, ParetoSet, Point, PointSink, SearchRange
from .oracles import RangeMin

__all__ = [
    "SweepOptions",
    "ColumnProbe",
    "SearchRange",
    "default_delta",
    "column_probe",
    "range_min_binary",
    "range_min_sweep",
    "successive",
    "successive_binary_search",
    "successive_sweep_search",
    "hybrid_sss_sc",
]

_NO_BOUND = np.int64(0)


@dataclass(frozen=True)
class SweepOptions:
    """Sweep tuning: delta is the skip threshold; 1 disables skipping."""

    delta: int = 1

    def __post_init__(self):
        if self.delta < 1:
            raise ValueError("delta must be >= 1")


def default_delta(n_a: int, n_b: int) -> int:
    """Skip threshold used when none is given: ceil(sqrt(max sizes))."""
    return max(1, math.isqrt(max(n_a, n_b, 1) - 1) + 1)


class ColumnProbe(NamedTuple):
    """Row-index boundaries of one column against a search range.

    Rows [f_x, l_x] satisfy the x bounds, rows [f_y, l_y] the y bounds; the
    column intersects the range iff both intervals do.
    """

    f_x: Optional[int]
    l_x: Optional[int]
    f_y: Optional[int]
    l_y: Optional[int]

    def first_in_range(self) -> Optional[int]:
        if None in (self.f_x, self.l_x, self.f_y, self.l_y):
            return None
        lo = max(self.f_x, self.f_y)
        hi = min(self.l_x, self.l_y)
        return lo if lo <= hi else None


def column_probe(m: MinkowskiView, j: int, r: SearchRange) -> ColumnProbe:
    """Four binary searches over column j (pure-Python reference form)."""
    ax, ay = m.a.xs, m.a.ys
    bxj = int(m.b.xs[j])
    byj = int(m.b.ys[j])
    na = len(ax)
    f_x = int(np.searchsorted(ax, r.x_min - bxj, side="left"))
    l_x = na - 1
    if r.x_max is not None:
        l_x = int(np.searchsorted(ax, r.x_max - bxj, side="left")) - 1
    # ay is strictly decreasing; search on the negated array
    f_y = int(np.searchsorted(-ay, -(r.y_max - byj), side="right"))
    l_y = na - 1
    if r.y_min is not None:
        l_y = int(np.searchsorted(-ay, -(r.y_min - byj), side="right")) - 1
    return ColumnProbe(
        f_x if f_x < na else None,
        l_x if l_x >= 0 else None,
        f_y if f_y < na else None,
        l_y if l_y >= 0 else None,
    )


def _range_args(r: SearchRange):
    has_xmax = r.x_max is not None
    has_ymin = r.y_min is not None
    return (
        np.int64(r.x_min),
        np.int64(r.y_max),
        has_xmax,
        np.int64(r.x_max) if has_xmax else _NO_BOUND,
        has_ymin,
        np.int64(r.y_min) if has_ymin else _NO_BOUND,
    )


def range_min_binary(m: MinkowskiView, r: SearchRange) -> Optional[RangeMin]:
    """Lexicographically smallest cell inside r via per-column binary search."""
    if m.n_a == 0 or m.n_b == 0:
        return None
    _kernels.warm()
    found, i, j, _ = _kernels.binary_oracle_kernel(m.a.xs, m.a.ys, m.b.xs, m.b.ys, *_range_args(r))
    return RangeMin(m.cell(int(i), int(j)), int(i), int(j)) if found else None


def range_min_sweep(
    m: MinkowskiView, r: SearchRange, opts: SweepOptions = SweepOptions()
) -> Optional[RangeMin]:
    """Lexicographically smallest cell inside r via one staircase sweep."""
    if m.n_a == 0 or m.n_b == 0:
        return None
    _kernels.warm()
    found, i, j, _, _ = _kernels.sweep_kernel(
        m.a.xs, m.a.ys, m.b.xs, m.b.ys, *_range_args(r), opts.delta
    )
    return RangeMin(m.cell(int(i), int(j)), int(i), int(j)) if found else None


def successive(
    a: ParetoSet,
    b: ParetoSet,
    sink: PointSink,
    *,
    oracle: str = "sweep",
    options: SweepOptions | None = None,
    stats: AlgoStats | None = None,
) -> int:
    """Emit the Pareto sum via k range-minimum oracle calls.

    Starts from cell(0, 0) (always Pareto-optimal) and repeatedly queries
    [p.x, inf) x (-inf, p.y); each call either yields the next point or ends
    the run. Streaming: only the current search corner is retained.
    """
    na, nb = len(a), len(b)
    if na == 0 or nb == 0:
        return 0
    if oracle not in ("sweep", "binary"):
        raise ValueError(f"unknown oracle {oracle!r}")
    _kernels.warm()
    ax, ay, bx, by = a.xs, a.ys, b.xs, b.ys
    delta = options.delta if options is not None else default_delta(na, nb)
    px = int(ax[0]) + int(bx[0])
    py = int(ay[0]) + int(by[0])
    sink.emit(px, py)
    k = 1
    calls = 0
    cells = 0
    jumps = 0
    sweep = oracle == "sweep"
    while True:
        calls += 1
        if sweep:
            found, i, j, c, jp = _kernels.sweep_kernel(
                ax, ay, bx, by, px, py, False, _NO_BOUND, False, _NO_BOUND, delta
            )
            jumps += jp
        else:
            found, i, j, c = _kernels.binary_oracle_kernel(
                ax, ay, bx, by, px, py, False, _NO_BOUND, False, _NO_BOUND
            )
        cells += c
        if not found:
            break
        px = int(ax[i] + bx[j])
        py = int(ay[i] + by[j])
        sink.emit(px, py)
        k += 1
    if stats is not None:
        stats.oracle_calls = calls
        stats.cells = int(cells)
        stats.jumps = int(jumps)
    return k


def successive_binary_search(
    a: ParetoSet, b: ParetoSet, sink: PointSink, *, stats: AlgoStats | None = None
) -> int:
    """SBS: the successive driver over the binary-search oracle."""
    return successive(a, b, sink, oracle="binary", stats=stats)


def successive_sweep_search(
    a: ParetoSet,
    b: ParetoSet,
    sink: PointSink,
    *,
    options: SweepOptions | None = None,
    stats: AlgoStats | None = None,
) -> int:
    """SSS: the successive driver over the sweep oracle (delta-skipping)."""
    return successive(a, b, sink, oracle="sweep", options=options, stats=stats)


class _BufferSink(PointSink):
    __slots__ = ("xs", "ys")

    def __init__(self):
        self.xs: list[int] = []
        self.ys: list[int] = []

    def emit(self, x: int, y: int) -> None:
        self.xs.append(x)
        self.ys.append(y)


def hybrid_sss_sc(
    a: ParetoSet,
    b: ParetoSet,
    sink: PointSink,
    *,
    options: SweepOptions | None = None,
    stats: AlgoStats | None = None,
) -> int:
    """SSS capped at max(n_a, n_b) oracle calls, falling back to SC.

    Phase one buffers at most max(n_a, n_b) + 1 points; if the oracle is not
    exhausted within the call budget the buffer is discarded and sort &
    compare runs from scratch, bounding the total by the better of the two.
    """
    na, nb = len(a), len(b)
    if na == 0 or nb == 0:
        return 0
    _kernels.warm()
    budget = max(na, nb)
    ax, ay, bx, by = a.xs, a.ys, b.xs, b.ys
    delta = options.delta if options is not None else default_delta(na, nb)
    buf = _BufferSink()
    px = int(ax[0]) + int(bx[0])
    py = int(ay[0]) + int(by[0])
    buf.emit(px, py)
    calls = 0
    cells = 0
    jumps = 0
    completed = False
    while calls < budget:
        calls += 1
        found, i, j, c, jp = _kernels.sweep_kernel(
            ax, ay, bx, by, px, py, False, _NO_BOUND, False, _NO_BOUND, delta
        )
        cells += c
        jumps += jp
        if not found:
            completed = True
            break
        px = int(ax[i] + bx[j])
        py = int(ay[i] + by[j])
        buf.emit(px, py)
    if completed:
        k = len(buf.xs)
        for x, y in zip(buf.xs, buf.ys):
            sink.emit(x, y)
    else:
        k = sort_compare(a, b, sink, stats=stats)
    if stats is not None:
        stats.oracle_calls = calls
        stats.cells += int(cells)
        stats.jumps = int(jumps)
    return k


def minkowski_view(a: ParetoSet, b: ParetoSet) -> MinkowskiView:
    return MinkowskiView(a, b)
