"""Space-partitioned non-dominance trees and the tree-based algorithms:
plain Pareto-tree filtering, sequential NonDomDC (SND), and doubling
NonDomDC (DND).

An SpndTree maintains a dynamic Pareto set under the offer protocol
``if tree.non_dom_prune(p): tree.insert(p)``: prune answers whether p is
non-dominated against the stored set (removing everything p dominates when
it is), and insert files p into the space partition. Stored points are
always mutually non-dominated, hence distinct in both coordinates.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from collections import deque
from dataclasses import dataclass, replace
from typing import Iterable, Optional

from .base import AlgoStats
from .core import ParetoSet, PointSink
from .hull import convex_seed


def _balanced_order(n: int) -> list[int]:
    """Middle-first index order (binary-search visiting order).

    Feeding a sorted sequence to the tree in this order keeps the median
    splits balanced; sorted-order insertion would grow a deep spine.
    """
    order: list[int] = []
    queue: deque[tuple[int, int]] = deque([(0, n)])
    while queue:
        lo, hi = queue.popleft()
        if lo >= hi:
            continue
        mid = (lo + hi) // 2
        order.append(mid)
        queue.append((lo, mid))
        queue.append((mid + 1, hi))
    return order


@dataclass(frozen=True)
class SpndConfig:
    """Tree parameters: leaf capacity p, fanout c, and the rebuild cadence
    for long-lived trees (None disables periodic rebuilding)."""

    leaf_capacity: int = 20
    max_children: int = 3
    rebuild_threshold: Optional[int] = 520

    def __post_init__(self):
        if self.leaf_capacity < 1:
            raise ValueError("leaf_capacity must be >= 1")
        if self.max_children < 2:
            raise ValueError("max_children must be >= 2")
        if self.rebuild_threshold is not None and self.rebuild_threshold < 1:
            raise ValueError("rebuild_threshold must be >= 1 or None")


DEFAULT_CONFIG = SpndConfig()


class _Node:
    __slots__ = ("px", "py", "children", "axis", "lo_x", "lo_y", "hi_x", "hi_y")

    def __init__(self):
        self.px: list[int] | None = None
        self.py: list[int] | None = None
        self.children: list[_Node] | None = None
        self.axis = 0
        self.lo_x = 0
        self.lo_y = 0
        self.hi_x = 0
        self.hi_y = 0

    @property
    def is_leaf(self) -> bool:
        return self.children is None


def _leaf(px: list[int], py: list[int]) -> _Node:
    """Leaf from points sorted by x; mutual non-domination makes the same
    order strictly decreasing in y, which the scan shortcuts rely on."""
    nd = _Node()
    nd.px = px
    nd.py = py
    nd.lo_x = px[0]
    nd.hi_x = px[-1]
    nd.lo_y = py[-1]
    nd.hi_y = py[0]
    return nd


def _internal(children: list["_Node"], axis: int) -> _Node:
    nd = _Node()
    nd.children = children
    nd.axis = axis
    nd.lo_x = min(c.lo_x for c in children)
    nd.hi_x = max(c.hi_x for c in children)
    nd.lo_y = min(c.lo_y for c in children)
    nd.hi_y = max(c.hi_y for c in children)
    return nd


class SpndTree:
    """Dynamic Pareto set in a bounded-fanout space-partitioning tree.

    Sibling bounding rectangles never overlap along their parent's split
    axis. Single-owner mutable state: not thread-safe.
    """

    __slots__ = ("config", "root", "inserts_since_rebuild", "rebuilds", "debug", "_size")

    def __init__(self, config: SpndConfig | None = None, points: Iterable = (), *, debug: bool = False):
        self.config = config or DEFAULT_CONFIG
        self.root: _Node | None = None
        self.inserts_since_rebuild = 0
        self.rebuilds = 0
        self.debug = debug
        self._size = 0
        for x, y in points:
            if self.non_dom_prune(x, y):
                self.insert(x, y)

    def __len__(self) -> int:
        return self._size

    # -- offer protocol -------------------------------------------------

    def non_dom_prune(self, x: int, y: int) -> bool:
        """False iff a stored point dominates or equals (x, y); when True,
        every stored point dominated by (x, y) has been removed.

        The stored set is always a staircase (x ascending, y descending),
        so the x-predecessor of the candidate carries the least y among all
        stored points with qx <= x: it dominates-or-equals the candidate iff
        anything does. Symmetrically the x-successor carries the greatest y
        among points with qx >= x and witnesses whether any stored point is
        dominated; only then does the mutating removal pass run. Both
        witness lookups are single root-to-leaf descents guided by the
        bounding boxes.
        """
        root = self.root
        if root is None:
            return True
        if root.lo_x <= x:
            nd = root
            while True:
                ch = nd.children
                if ch is None:
                    idx = bisect_right(nd.px, x) - 1
                    if nd.py[idx] <= y:
                        return False
                    break
                if nd.axis == 0:
                    nxt = ch[0]
                    for c in ch:  # ascending x; rightmost child reaching <= x
                        if c.lo_x <= x:
                            nxt = c
                        else:
                            break
                else:
                    nxt = ch[-1]
                    for c in ch:  # descending x; first child reaching <= x
                        if c.lo_x <= x:
                            nxt = c
                            break
                nd = nxt
        if root.hi_x >= x:
            nd = root
            while True:
                ch = nd.children
                if ch is None:
                    idx = bisect_left(nd.px, x)
                    if idx < len(nd.px) and nd.py[idx] >= y:
                        removed, emptied = self._remove_dominated(root, x, y)
                        self._size -= removed
                        if emptied:
                            self.root = None
                    break
                if nd.axis == 0:
                    nxt = ch[-1]
                    for c in ch:  # ascending x; leftmost child reaching >= x
                        if c.hi_x >= x:
                            nxt = c
                            break
                else:
                    nxt = ch[0]
                    for c in reversed(ch):  # reversed: ascending x again
                        if c.hi_x >= x:
                            nxt = c
                            break
                nd = nxt
        return True

    @staticmethod
    def _subtree_size(nd: _Node) -> int:
        total = 0
        stack = [nd]
        while stack:
            n = stack.pop()
            if n.children is None:
                total += len(n.px)
            else:
                stack.extend(n.children)
        return total

    def _remove_dominated(self, nd: _Node, x: int, y: int) -> tuple[int, bool]:
        """Remove stored points coordinate-wise >= (x, y).

        Returns (number removed, whether nd emptied). A subtree whose min
        corner is dominated by the candidate is dropped whole; one whose max
        corner is not coordinate-wise >= the candidate is skipped.
        """
        if nd.children is None:
            px = nd.px
            py = nd.py
            cut = bisect_left(px, x)
            kx = px[:cut]
            ky = py[:cut]
            for idx in range(cut, len(px)):
                if py[idx] < y:
                    kx.append(px[idx])
                    ky.append(py[idx])
            removed = len(px) - len(kx)
            if not kx:
                return removed, True
            if removed:
                nd.px = kx
                nd.py = ky
                nd.lo_x = kx[0]
                nd.hi_x = kx[-1]
                nd.lo_y = ky[-1]
                nd.hi_y = ky[0]
            return removed, False
        kept: list[_Node] = []
        removed = 0
        for child in nd.children:
            if child.hi_x < x or child.hi_y < y:
                kept.append(child)
                continue
            if child.lo_x >= x and child.lo_y >= y:
                removed += self._subtree_size(child)
                continue
            got, emptied = self._remove_dominated(child, x, y)
            removed += got
            if not emptied:
                kept.append(child)
        if not kept:
            return removed, True
        if removed:
            if len(kept) == 1:
                only = kept[0]
                nd.px = only.px
                nd.py = only.py
                nd.children = only.children
                nd.axis = only.axis
                nd.lo_x, nd.hi_x = only.lo_x, only.hi_x
                nd.lo_y, nd.hi_y = only.lo_y, only.hi_y
            else:
                nd.children = kept
                nd.lo_x = min(c.lo_x for c in kept)
                nd.hi_x = max(c.hi_x for c in kept)
                nd.lo_y = min(c.lo_y for c in kept)
                nd.hi_y = max(c.hi_y for c in kept)
        return removed, False

    def insert(self, x: int, y: int) -> None:
        """File a point known to be non-dominated against the stored set."""
        if self.debug:
            assert self._insert_allowed(x, y), f"inserting dominated point ({x}, {y})"
        if self.root is None:
            self.root = _leaf([x], [y])
        else:
            nd = self.root
            while True:
                if x < nd.lo_x:
                    nd.lo_x = x
                elif x > nd.hi_x:
                    nd.hi_x = x
                if y < nd.lo_y:
                    nd.lo_y = y
                elif y > nd.hi_y:
                    nd.hi_y = y
                ch = nd.children
                if ch is None:
                    break
                chosen = ch[0]
                if nd.axis == 0:
                    for c in ch:
                        if c.lo_x <= x:
                            chosen = c
                        else:
                            break
                else:
                    for c in ch:
                        if c.lo_y <= y:
                            chosen = c
                        else:
                            break
                nd = chosen
            pos = bisect_left(nd.px, x)
            nd.px.insert(pos, x)
            nd.py.insert(pos, y)
            if len(nd.px) > self.config.leaf_capacity:
                self._split_leaf(nd)
        self._size += 1
        self.inserts_since_rebuild += 1
        threshold = self.config.rebuild_threshold
        if threshold is not None and self.inserts_since_rebuild >= threshold:
            self.rebuild()

    def _insert_allowed(self, x: int, y: int) -> bool:
        return all(not (qx <= x and qy <= y) for qx, qy in self.points())

    def _split_leaf(self, nd: _Node) -> None:
        """Split an overfull leaf at the median along its wider axis; the
        leaf becomes an internal node with two leaf children.

        Leaf points are x-sorted (hence y-reverse-sorted), so both median
        splits are plain list halving: the y-median cut is the x-order cut
        counted from the other end.
        """
        axis = 0 if (nd.hi_x - nd.lo_x) >= (nd.hi_y - nd.lo_y) else 1
        px = nd.px
        py = nd.py
        mid = len(px) // 2
        if axis == 0:
            children = [_leaf(px[:mid], py[:mid]), _leaf(px[mid:], py[mid:])]
        else:
            cut = len(px) - mid
            # low-y child first: it holds the high-x suffix
            children = [_leaf(px[cut:], py[cut:]), _leaf(px[:cut], py[:cut])]
        nd.px = None
        nd.py = None
        nd.axis = axis
        nd.children = children

    # -- maintenance ----------------------------------------------------

    def rebuild(self) -> None:
        """Bulk reload: points sorted by x, chunked into leaves, packed into
        a fanout-c tree split along x at every level."""
        pts = sorted(self.points())
        self.inserts_since_rebuild = 0
        self.rebuilds += 1
        if not pts:
            self.root = None
            return
        p = self.config.leaf_capacity
        nodes: list[_Node] = [
            _leaf([q[0] for q in pts[s : s + p]], [q[1] for q in pts[s : s + p]])
            for s in range(0, len(pts), p)
        ]
        c = self.config.max_children
        while len(nodes) > 1:
            groups = -(-len(nodes) // c)
            size, extra = divmod(len(nodes), groups)
            nxt: list[_Node] = []
            pos = 0
            for g in range(groups):
                take = size + (1 if g < extra else 0)
                nxt.append(_internal(nodes[pos : pos + take], axis=0))
                pos += take
            nodes = nxt
        self.root = nodes[0]

    def points(self) -> list[tuple[int, int]]:
        out: list[tuple[int, int]] = []
        if self.root is None:
            return out
        stack = [self.root]
        while stack:
            nd = stack.pop()
            if nd.children is None:
                out.extend(zip(nd.px, nd.py))
            else:
                stack.extend(nd.children)
        return out

    def to_pareto_set(self) -> ParetoSet:
        pts = sorted(self.points())
        return ParetoSet(pts)

    def node_count(self) -> int:
        n = 0
        stack = [self.root] if self.root is not None else []
        while stack:
            nd = stack.pop()
            n += 1
            if nd.children is not None:
                stack.extend(nd.children)
        return n

    def check_invariants(self) -> None:
        """Raise AssertionError on any structural violation (test hook)."""
        if self.root is None:
            return
        assert self._size == len(self.points())
        stack = [self.root]
        while stack:
            nd = stack.pop()
            if nd.children is None:
                assert nd.px and len(nd.px) <= self.config.leaf_capacity
                assert nd.px == sorted(nd.px)
                for qx, qy in zip(nd.px, nd.py):
                    assert nd.lo_x <= qx <= nd.hi_x and nd.lo_y <= qy <= nd.hi_y
            else:
                assert 2 <= len(nd.children) <= self.config.max_children
                for child in nd.children:
                    assert child.lo_x >= nd.lo_x and child.hi_x <= nd.hi_x
                    assert child.lo_y >= nd.lo_y and child.hi_y <= nd.hi_y
                for left, right in zip(nd.children, nd.children[1:]):
                    if nd.axis == 0:
                        assert left.hi_x < right.lo_x
                    else:
                        assert left.hi_y < right.lo_y
                stack.extend(nd.children)


# -- algorithms ---------------------------------------------------------


def _extract(tree: SpndTree, sink: PointSink) -> int:
    pts = sorted(tree.points())
    for x, y in pts:
        sink.emit(x, y)
    return len(pts)


def _offer_columns(tree: SpndTree, a: ParetoSet, b: ParetoSet, stats: AlgoStats | None) -> int:
    """Offer every matrix cell column by column; returns the column-boundary
    peak of the intermediate stored set."""
    peak = len(tree)
    ax_list = a.xs.tolist()
    ay_list = a.ys.tolist()
    prune = tree.non_dom_prune
    insert = tree.insert
    for j in range(len(b)):
        bxj = int(b.xs[j])
        byj = int(b.ys[j])
        for x0, y0 in zip(ax_list, ay_list):
            x = x0 + bxj
            y = y0 + byj
            if prune(x, y):
                insert(x, y)
        size = len(tree)
        if size > peak:
            peak = size
    if stats is not None:
        stats.cells += len(a) * len(b)
    return peak


def pareto_tree_filter(
    a: ParetoSet,
    b: ParetoSet,
    sink: PointSink,
    *,
    seed_with_hull: bool = False,
    config: SpndConfig | None = None,
    stats: AlgoStats | None = None,
) -> int:
    """Offer every cell to one Pareto tree, then extract the stored set.

    The tree starts from the two guaranteed members cell(0, 0) and
    cell(n_a-1, n_b-1), or from the whole convex seed C' when requested.
    """
    if len(a) == 0 or len(b) == 0:
        return 0
    tree = SpndTree(config)
    if seed_with_hull:
        seed, _ = convex_seed(a, b)
        seed_pts = list(zip(seed.xs.tolist(), seed.ys.tolist()))
    else:
        first = (int(a.xs[0] + b.xs[0]), int(a.ys[0] + b.ys[0]))
        last = (int(a.xs[-1] + b.xs[-1]), int(a.ys[-1] + b.ys[-1]))
        seed_pts = [first] if last == first else [first, last]
    for x, y in seed_pts:
        if tree.non_dom_prune(x, y):
            tree.insert(x, y)
    peak = _offer_columns(tree, a, b, stats)
    if stats is not None:
        stats.frontier_peak = peak
        stats.rebuilds = tree.rebuilds
    return _extract(tree, sink)


def nondomdc_sequential(
    a: ParetoSet,
    b: ParetoSet,
    sink: PointSink,
    *,
    config: SpndConfig | None = None,
    stats: AlgoStats | None = None,
) -> int:
    """Sequential NonDomDC: fold matrix columns into one tree-backed frontier."""
    if len(a) == 0 or len(b) == 0:
        return 0
    tree = SpndTree(config)
    peak = _offer_columns(tree, a, b, stats)
    if stats is not None:
        stats.frontier_peak = peak
        stats.rebuilds = tree.rebuilds
    return _extract(tree, sink)


def nondomdc_doubling(
    a: ParetoSet,
    b: ParetoSet,
    sink: PointSink,
    *,
    config: SpndConfig | None = None,
    stats: AlgoStats | None = None,
) -> int:
    """Doubling NonDomDC: merge column frontiers pairwise, mergesort-style.

    Each merge offers the smaller frontier's points into the larger's tree;
    an odd frontier is promoted unchanged. Level trees are short-lived and
    never rebuilt. Per-level frontier peaks are recorded on the stats.
    """
    na, nb = len(a), len(b)
    if na == 0 or nb == 0:
        return 0
    cfg = replace(config or DEFAULT_CONFIG, rebuild_threshold=None)
    ax_list = a.xs.tolist()
    ay_list = a.ys.tolist()

    def column(j: int) -> list[tuple[int, int]]:
        bxj = int(b.xs[j])
        byj = int(b.ys[j])
        return [(x + bxj, y + byj) for x, y in zip(ax_list, ay_list)]

    def tree_from(pts: list[tuple[int, int]]) -> SpndTree:
        tree = SpndTree(cfg)
        insert = tree.insert
        for t in _balanced_order(len(pts)):  # already mutually non-dominated
            insert(*pts[t])
        return tree

    def merge(big: SpndTree, pts: list[tuple[int, int]]) -> int:
        peak = len(big)
        prune = big.non_dom_prune
        insert = big.insert
        for t in _balanced_order(len(pts)):
            x, y = pts[t]
            if prune(x, y):
                insert(x, y)
                size = len(big)
                if size > peak:
                    peak = size
        return peak

    level_peaks: list[int] = []
    peak_all = 0
    cells = 0

    # level 0: pair up raw columns
    frontiers: list[SpndTree] = []
    level_peak = 0
    j = 0
    while j + 1 < nb:
        cells += 2 * na
        tree = tree_from(column(j))
        level_peak = max(level_peak, merge(tree, column(j + 1)))
        frontiers.append(tree)
        j += 2
    if j < nb:
        cells += na
        tree = tree_from(column(j))
        level_peak = max(level_peak, len(tree))
        frontiers.append(tree)
    level_peaks.append(level_peak)
    peak_all = max(peak_all, level_peak)

    while len(frontiers) > 1:
        nxt: list[SpndTree] = []
        level_peak = 0
        t = 0
        while t + 1 < len(frontiers):
            fa, fb = frontiers[t], frontiers[t + 1]
            if len(fb) > len(fa):
                fa, fb = fb, fa
            level_peak = max(level_peak, merge(fa, sorted(fb.points())))
            nxt.append(fa)
            t += 2
        if t < len(frontiers):
            nxt.append(frontiers[t])
            level_peak = max(level_peak, len(frontiers[t]))
        frontiers = nxt
        level_peaks.append(level_peak)
        peak_all = max(peak_all, level_peak)

    if stats is not None:
        stats.cells += cells
        stats.frontier_peak = peak_all
        stats.level_peaks = level_peaks
        stats.rebuilds = 0
    return _extract(frontiers[0], sink)
