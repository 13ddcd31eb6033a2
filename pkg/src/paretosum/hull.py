"""Lower convex chains and the linear-time convex seed.

The convex seed C' is the vertex chain of the Minkowski sum of the two
inputs' lower convex chains. Every seed point is a guaranteed member of the
Pareto sum, so C' can bootstrap the priority and tree-based algorithms.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import ParetoSet, Point


@dataclass(frozen=True)
class ConvexChain:
    """Lower-left convex chain: strictly increasing x, strictly decreasing y,
    non-decreasing edge slopes (strictly increasing for hulls of point sets).

    ``source_ranks[v]`` is the rank of vertex v in the originating Pareto
    set; for merged chains it is the (i, j) rank pair instead.
    """

    vertices: tuple[Point, ...]
    source_ranks: tuple

    def __len__(self) -> int:
        return len(self.vertices)


def _cross(ox, oy, ax, ay, bx, by) -> int:
    """Orientation of (o->a) x (o->b); exact integer arithmetic."""
    return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox)


def lower_hull(s: ParetoSet) -> ConvexChain:
    """Lower-left convex chain of s from its first to its last point.

    Single monotone-chain pass over the presorted input; collinear middle
    points are dropped so edge slopes are strictly increasing.
    """
    if len(s) == 0:
        raise ValueError("lower_hull requires a non-empty Pareto set")
    xs = s.xs.tolist()
    ys = s.ys.tolist()
    kept: list[int] = []
    for idx in range(len(xs)):
        while len(kept) >= 2:
            o, a = kept[-2], kept[-1]
            if _cross(xs[o], ys[o], xs[a], ys[a], xs[idx], ys[idx]) <= 0:
                kept.pop()
            else:
                break
        kept.append(idx)
    return ConvexChain(
        vertices=tuple(Point(xs[i], ys[i]) for i in kept),
        source_ranks=tuple(kept),
    )


def _slope_less(dx1, dy1, dx2, dy2) -> bool:
    # both edges run right and down; dy/dx comparison without division
    return dy1 * dx2 < dy2 * dx1


def convex_minkowski(p: ConvexChain, q: ConvexChain) -> ConvexChain:
    """Lower-left chain of p + q via the classic edge merge.

    Edge vectors of both chains are merged in increasing slope order and
    accumulated from p[0] + q[0]. On slope ties p's edge is consumed first;
    the intermediate accumulation points are kept (they are genuine
    Minkowski-sum points). Result size is at most |p| + |q| - 1. Vertex v
    carries the source-rank pair that produced it.
    """
    pv, qv = p.vertices, q.vertices
    i = j = 0
    x = pv[0].x + qv[0].x
    y = pv[0].y + qv[0].y
    verts = [Point(x, y)]
    ranks = [(p.source_ranks[0], q.source_ranks[0])]
    while i < len(pv) - 1 or j < len(qv) - 1:
        take_p = False
        if i < len(pv) - 1 and j < len(qv) - 1:
            dxp = pv[i + 1].x - pv[i].x
            dyp = pv[i + 1].y - pv[i].y
            dxq = qv[j + 1].x - qv[j].x
            dyq = qv[j + 1].y - qv[j].y
            take_p = not _slope_less(dxq, dyq, dxp, dyp)
        elif i < len(pv) - 1:
            take_p = True
        if take_p:
            dx = pv[i + 1].x - pv[i].x
            dy = pv[i + 1].y - pv[i].y
            i += 1
        else:
            dx = qv[j + 1].x - qv[j].x
            dy = qv[j + 1].y - qv[j].y
            j += 1
        x += dx
        y += dy
        verts.append(Point(x, y))
        ranks.append((p.source_ranks[i], q.source_ranks[j]))
    return ConvexChain(vertices=tuple(verts), source_ranks=tuple(ranks))


def convex_seed(a: ParetoSet, b: ParetoSet) -> tuple[ParetoSet, list[tuple[int, int]]]:
    """Guaranteed Pareto-sum subset C' with (i, j) cell provenance per point.

    C' is always a subset of the Pareto sum; it is computed in O(|a| + |b|)
    from the presorted inputs. Note that even for inputs in strictly convex
    position C' can be a proper subset: non-dominated cells may lie strictly
    above the summed hull boundary.
    """
    if len(a) == 0 or len(b) == 0:
        return ParetoSet(), []
    merged = convex_minkowski(lower_hull(a), lower_hull(b))
    points = ParetoSet.from_arrays(
        [v.x for v in merged.vertices], [v.y for v in merged.vertices]
    )
    return points, list(merged.source_ranks)
