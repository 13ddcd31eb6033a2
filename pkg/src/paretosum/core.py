"""Core domain types: points, Pareto sets, the implicit Minkowski matrix,
search ranges, and output sinks.

All points are integer 2-D cost vectors under the minimization convention.
Everything here is immutable after construction and safe to share across
threads; sinks are the one exception (single consumer, not thread-safe).
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple, Optional

import numpy as np

# Input coordinates must satisfy |c| < COORD_LIMIT so that any pairwise sum
# fits into a 64-bit signed integer with plenty of headroom. Enforced when
# parsing instance files; internal constructions (e.g. lifted convolution
# instances) carry their own tighter guards.
COORD_LIMIT = 2**31


class Point(NamedTuple):
    x: int
    y: int

    def __add__(self, other):  # type: ignore[override]
        return Point(self.x + other[0], self.y + other[1])


def dominates(p, q) -> bool:
    """True iff p != q and p is coordinate-wise <= q."""
    px, py = p
    qx, qy = q
    return px <= qx and py <= qy and (px != qx or py != qy)


def validate(points) -> bool:
    """Check the sorted-Pareto-set invariants on a sequence of points.

    A valid sequence has strictly increasing x and strictly decreasing y,
    which together rule out duplicates and any domination between members.
    """
    prev_x = prev_y = None
    for x, y in points:
        if prev_x is not None and (x <= prev_x or y >= prev_y):
            return False
        prev_x, prev_y = x, y
    return True


def _as_int64(values) -> np.ndarray:
    arr = np.asarray(values, dtype=np.int64)
    if arr.ndim != 1:
        raise ValueError("expected a flat coordinate array")
    return np.ascontiguousarray(arr)


class ParetoSet:
    """Lexicographically sorted sequence of mutually non-dominated points.

    Backed by two parallel int64 arrays (xs strictly increasing, ys strictly
    decreasing). Instances are immutable; algorithms read the arrays directly.
    """

    __slots__ = ("xs", "ys")

    def __init__(self, points: Iterable = ()):
        pts = list(points)
        xs = _as_int64([p[0] for p in pts])
        ys = _as_int64([p[1] for p in pts])
        self._init_from(xs, ys, check=True)

    def _init_from(self, xs: np.ndarray, ys: np.ndarray, check: bool) -> None:
        if len(xs) != len(ys):
            raise ValueError("coordinate arrays differ in length")
        if check and len(xs) > 1:
            if not (np.all(np.diff(xs) > 0) and np.all(np.diff(ys) < 0)):
                raise ValueError("points do not form a sorted Pareto set")
        self.xs = xs
        self.ys = ys

    @classmethod
    def from_arrays(cls, xs, ys, *, check: bool = True) -> "ParetoSet":
        ps = cls.__new__(cls)
        ps._init_from(_as_int64(xs), _as_int64(ys), check=check)
        return ps

    def __len__(self) -> int:
        return len(self.xs)

    def __getitem__(self, i: int) -> Point:
        return Point(int(self.xs[i]), int(self.ys[i]))

    def __iter__(self) -> Iterator[Point]:
        for x, y in zip(self.xs.tolist(), self.ys.tolist()):
            yield Point(x, y)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ParetoSet):
            return NotImplemented
        return np.array_equal(self.xs, other.xs) and np.array_equal(self.ys, other.ys)

    def __hash__(self):
        return hash((self.xs.tobytes(), self.ys.tobytes()))

    def __repr__(self) -> str:
        if len(self) <= 8:
            body = ", ".join(f"({x}, {y})" for x, y in self)
        else:
            body = f"{len(self)} points"
        return f"ParetoSet([{body}])"

    @property
    def points(self) -> list[Point]:
        return list(self)


class MinkowskiView:
    """Implicit n_a x n_b matrix with cell(i, j) = a[i] + b[j].

    Cells are computed on demand and never stored. Rows and columns, read in
    index order, are themselves sorted Pareto sequences. Indices are 0-based.
    """

    __slots__ = ("a", "b")

    def __init__(self, a: ParetoSet, b: ParetoSet):
        self.a = a
        self.b = b

    @property
    def n_a(self) -> int:
        return len(self.a)

    @property
    def n_b(self) -> int:
        return len(self.b)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.n_a, self.n_b)

    def cell(self, i: int, j: int) -> Point:
        if not (0 <= i < self.n_a and 0 <= j < self.n_b):
            raise IndexError(f"cell ({i}, {j}) outside {self.shape} matrix")
        return Point(int(self.a.xs[i] + self.b.xs[j]), int(self.a.ys[i] + self.b.ys[j]))

    def column(self, j: int) -> list[Point]:
        return [self.cell(i, j) for i in range(self.n_a)]

    def row(self, i: int) -> list[Point]:
        return [self.cell(i, j) for j in range(self.n_b)]


class SearchRange(NamedTuple):
    """Half-open query rectangle for the range-minimum oracles.

    A point p lies inside iff p.x >= x_min and p.y < y_max, and additionally
    p.x < x_max / p.y >= y_min when those optional bounds are present.
    """

    x_min: int
    y_max: int
    x_max: Optional[int] = None
    y_min: Optional[int] = None

    def contains(self, p) -> bool:
        x, y = p
        if x < self.x_min or y >= self.y_max:
            return False
        if self.x_max is not None and x >= self.x_max:
            return False
        if self.y_min is not None and y < self.y_min:
            return False
        return True


class PointSink:
    """Consumer of points emitted in strictly increasing lexicographic order.

    Implementations are single-consumer and accept each point exactly once.
    """

    def emit(self, x: int, y: int) -> None:
        raise NotImplementedError

    def emit_many(self, xs, ys) -> None:
        emit = self.emit
        for x, y in zip(xs, ys):
            emit(int(x), int(y))


class CollectSink(PointSink):
    """Collects emitted points; ``result()`` wraps them as a ParetoSet."""

    def __init__(self):
        self._xs: list[int] = []
        self._ys: list[int] = []

    def emit(self, x: int, y: int) -> None:
        self._xs.append(x)
        self._ys.append(y)

    def emit_many(self, xs, ys) -> None:
        self._xs.extend(int(v) for v in xs)
        self._ys.extend(int(v) for v in ys)

    @property
    def points(self) -> list[Point]:
        return [Point(x, y) for x, y in zip(self._xs, self._ys)]

    def result(self) -> ParetoSet:
        return ParetoSet.from_arrays(self._xs, self._ys, check=False)


class CountSink(PointSink):
    """Counts emissions without storing them (streaming output model)."""

    def __init__(self):
        self.count = 0

    def emit(self, x: int, y: int) -> None:
        self.count += 1

    def emit_many(self, xs, ys) -> None:
        self.count += len(xs)


class WriterSink(PointSink):
    """Streams emitted points as ``x y`` lines to a text file object."""

    def __init__(self, fp):
        self._fp = fp
        self.count = 0

    def emit(self, x: int, y: int) -> None:
        self._fp.write(f"{x} {y}\n")
        self.count += 1


class CheckingSink(PointSink):
    """Wraps another sink and asserts strictly increasing lexicographic order."""

    def __init__(self, inner: PointSink | None = None):
        self.inner = inner
        self._last: Optional[tuple[int, int]] = None
        self.count = 0

    def emit(self, x: int, y: int) -> None:
        if self._last is not None and (x, y) <= self._last:
            raise AssertionError(f"out-of-order emission {(x, y)} after {self._last}")
        self._last = (x, y)
        self.count += 1
        if self.inner is not None:
            self.inner.emit(x, y)


def filter_sorted(points, sink: PointSink) -> int:
    """Emit the distinct non-dominated points of a lexicographically sorted
    sequence; returns the emitted count.

    A point passes iff it is neither dominated by nor equal to the previously
    emitted point, which for sorted input reduces to a strict drop in y.
    Unsorted input is a contract violation and is not detected.
    """
    k = 0
    last_y = 0
    for x, y in points:
        if k == 0 or y < last_y:
            sink.emit(int(x), int(y))
            last_y = y
            k += 1
    return k


def merge_union(s: ParetoSet, t: ParetoSet, sink: PointSink) -> int:
    """Emit the Pareto filter of s | t in sorted order in O(|s| + |t|).

    Equivalent to filter_sorted applied to the merged sequence.
    """
    sx, sy = s.xs.tolist(), s.ys.tolist()
    tx, ty = t.xs.tolist(), t.ys.tolist()
    i = j = k = 0
    ns, nt = len(sx), len(tx)
    last_y = 0
    while i < ns or j < nt:
        if j >= nt or (i < ns and (sx[i], sy[i]) <= (tx[j], ty[j])):
            x, y = sx[i], sy[i]
            i += 1
        else:
            x, y = tx[j], ty[j]
            j += 1
        if k == 0 or y < last_y:
            sink.emit(x, y)
            last_y = y
            k += 1
    return k
