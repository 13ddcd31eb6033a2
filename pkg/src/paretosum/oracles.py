"""Brute-force reference oracles and canonical fixtures.

The oracles materialize the full Minkowski matrix (guarded by a size limit)
and are the single source of truth for every algorithm's expected output.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import MinkowskiView, ParetoSet, Point, SearchRange

# Hard cap on n_a * n_b for materializing oracles.
ORACLE_CELL_LIMIT = 10**7


class OracleSizeError(ValueError):
    """Raised when an oracle would need to materialize too many cells."""


def _materialize(a: ParetoSet, b: ParetoSet) -> tuple[np.ndarray, np.ndarray]:
    cells = len(a) * len(b)
    if cells > ORACLE_CELL_LIMIT:
        raise OracleSizeError(
            f"instance has {cells} cells, above the oracle limit of {ORACLE_CELL_LIMIT}"
        )
    X = (a.xs[:, None] + b.xs[None, :]).ravel()
    Y = (a.ys[:, None] + b.ys[None, :]).ravel()
    order = np.lexsort((Y, X))
    return X[order], Y[order]


def pareto_sum_reference(a: ParetoSet, b: ParetoSet) -> tuple[ParetoSet, int]:
    """Full-matrix Pareto sum: (distinct non-dominated points, cell count).

    The point set uses set semantics (duplicate cell values appear once);
    the cell count counts every matrix cell that no other cell strictly
    dominates, so cells sharing a non-dominated value are counted each.
    """
    if len(a) == 0 or len(b) == 0:
        return ParetoSet(), 0
    X, Y = _materialize(a, b)
    running_min = np.minimum.accumulate(Y)
    keep = np.empty(len(Y), dtype=bool)
    keep[0] = True
    keep[1:] = Y[1:] < running_min[:-1]

    # Non-dominated cells: a cell is dominated iff some lexicographically
    # smaller cell has y <= its y; cells equal in value never dominate each
    # other, so the prefix minimum is taken over strictly smaller values.
    new_value = np.empty(len(X), dtype=bool)
    new_value[0] = True
    new_value[1:] = (np.diff(X) != 0) | (np.diff(Y) != 0)
    group_start = np.maximum.accumulate(np.where(new_value, np.arange(len(X)), 0))
    prev_min = np.empty(len(Y), dtype=np.int64)
    prev_min[0] = Y[0]
    prev_min[1:] = running_min[:-1]
    # For each cell, the minimum y among strictly smaller values is the
    # running minimum just before its value group starts.
    dominated = np.zeros(len(Y), dtype=bool)
    nontrivial = group_start > 0
    dominated[nontrivial] = prev_min[group_start[nontrivial]] <= Y[nontrivial]
    cell_count = int(np.count_nonzero(~dominated))

    return ParetoSet.from_arrays(X[keep], Y[keep], check=False), cell_count


def reference_points(a: ParetoSet, b: ParetoSet) -> ParetoSet:
    return pareto_sum_reference(a, b)[0]


class RangeMin:
    """Result of a range-minimum query: the point and a witness cell index."""

    __slots__ = ("point", "i", "j")

    def __init__(self, point: Point, i: int, j: int):
        self.point = point
        self.i = i
        self.j = j

    def __eq__(self, other):
        if not isinstance(other, RangeMin):
            return NotImplemented
        return self.point == other.point

    def __repr__(self):
        return f"RangeMin({self.point}, i={self.i}, j={self.j})"


def range_min_reference(m: MinkowskiView, r: SearchRange) -> Optional[RangeMin]:
    """Scan every cell; return the lexicographically smallest one inside r."""
    cells = m.n_a * m.n_b
    if cells > ORACLE_CELL_LIMIT:
        raise OracleSizeError(
            f"instance has {cells} cells, above the oracle limit of {ORACLE_CELL_LIMIT}"
        )
    best: Optional[RangeMin] = None
    for i in range(m.n_a):
        for j in range(m.n_b):
            p = m.cell(i, j)
            if r.contains(p) and (best is None or (p.x, p.y) < (best.point.x, best.point.y)):
                best = RangeMin(p, i, j)
    return best


@dataclass(frozen=True)
class Fixture:
    """Named instance with oracle-checked expected output."""

    name: str
    a: ParetoSet
    b: ParetoSet
    expected_k: int
    expected_points: Optional[ParetoSet] = None
    expected_cell_count: Optional[int] = None


# 10x10 teaser instance. A is the first row of the printed matrix and B is
# the first column translated so B[0] = (0, 0); translating one input by a
# constant vector translates every matrix cell by that same vector, so this
# normalization reproduces the printed cell values exactly.
FIG1_A = ParetoSet(
    [(1, 60), (3, 58), (5, 51), (13, 50), (14, 46), (15, 43), (21, 42), (22, 38), (24, 36), (26, 34)]
)
FIG1_B = ParetoSet(
    [(0, 0), (3, -4), (6, -6), (9, -7), (12, -10), (15, -11), (16, -12), (20, -13), (23, -15), (27, -19)]
)

# The 27 highlighted cells of the teaser matrix; the values (24, 36) and
# (49, 19) each occur in two cells, so the distinct point count is 25.
FIG1_GREEN_CELLS = [
    (1, 60), (3, 58), (5, 51), (15, 43), (24, 36),
    (4, 56), (8, 47), (18, 39), (25, 34), (27, 32), (29, 30),
    (11, 45), (21, 37), (32, 28),
    (14, 44), (24, 36), (35, 27),
    (17, 41), (36, 26), (38, 24),
    (41, 23),
    (42, 22),
    (46, 21),
    (49, 19),
    (49, 19), (51, 17), (53, 15),
]

FIG1 = Fixture(
    name="fig1",
    a=FIG1_A,
    b=FIG1_B,
    expected_k=25,
    expected_points=ParetoSet(sorted(set(FIG1_GREEN_CELLS))),
    expected_cell_count=27,
)

CONVEX_3X3 = Fixture(
    name="convex-3x3",
    a=ParetoSet([(0, 3), (1, 1), (3, 0)]),
    b=ParetoSet([(0, 3), (1, 1), (3, 0)]),
    expected_k=5,
    expected_points=ParetoSet([(0, 6), (1, 4), (2, 2), (4, 1), (6, 0)]),
)

SINGLETONS = Fixture(
    name="singletons",
    a=ParetoSet([(0, 0)]),
    b=ParetoSet([(9, 9)]),
    expected_k=1,
    expected_points=ParetoSet([(9, 9)]),
)

CORE_FIXTURES = (FIG1, CONVEX_3X3, SINGLETONS)
