"""SPND tree behavior (offer protocol, splits, rebuilds, invariants) and
the three tree-based Pareto-sum algorithms."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.stateful import RuleBasedStateMachine, invariant, rule

from paretosum import (
    AlgoStats,
    CheckingSink,
    CollectSink,
    CountSink,
    SpndConfig,
    SpndTree,
    nondomdc_doubling,
    nondomdc_sequential,
    pareto_tree_filter,
    reference_points,
)
from paretosum.generators import GenSpec, generate, generate_pair
from paretosum.oracles import CONVEX_3X3, FIG1, SINGLETONS

from conftest import make_pareto_set

TREE_ALGORITHMS = {
    "ptree": lambda a, b, sink, stats=None: pareto_tree_filter(a, b, sink, stats=stats),
    "ptree-hull": lambda a, b, sink, stats=None: pareto_tree_filter(
        a, b, sink, seed_with_hull=True, stats=stats
    ),
    "snd": lambda a, b, sink, stats=None: nondomdc_sequential(a, b, sink, stats=stats),
    "dnd": lambda a, b, sink, stats=None: nondomdc_doubling(a, b, sink, stats=stats),
}


class BruteForceFrontier:
    """Reference model: the Pareto filter of every point offered so far."""

    def __init__(self):
        self.points: set[tuple[int, int]] = set()

    def offer(self, x: int, y: int) -> bool:
        if any(qx <= x and qy <= y for qx, qy in self.points):
            return False
        self.points = {(qx, qy) for qx, qy in self.points if not (x <= qx and y <= qy)}
        self.points.add((x, y))
        return True


class TestOfferProtocol:
    def test_incomparable_candidate_keeps_tree(self):
        tree = SpndTree(points=[(0, 6), (6, 0)])
        assert tree.non_dom_prune(2, 2)
        assert sorted(tree.points()) == [(0, 6), (6, 0)]

    def test_strictly_dominated_candidate_rejected(self):
        tree = SpndTree(points=[(2, 2)])
        assert not tree.non_dom_prune(3, 3)
        assert not tree.non_dom_prune(2, 2)  # equality also rejects

    def test_dominating_candidate_removes_everything(self):
        tree = SpndTree(points=[(1, 4), (2, 2), (4, 1)])
        assert tree.non_dom_prune(1, 1)
        assert tree.points() == []
        tree.insert(1, 1)
        assert tree.points() == [(1, 1)]

    def test_empty_tree_inserts(self):
        tree = SpndTree()
        assert tree.non_dom_prune(5, 5)
        tree.insert(5, 5)
        assert len(tree) == 1


class TestStructure:
    def test_leaf_split_when_capacity_exceeded(self):
        tree = SpndTree()
        n = SpndConfig().leaf_capacity + 1
        for t in range(n):  # staircase: mutually incomparable
            tree.insert(t, n - t)
        tree.check_invariants()
        assert not tree.root.is_leaf
        left, right = tree.root.children
        assert left.is_leaf and right.is_leaf
        assert left.hi_x < right.lo_x  # non-overlapping along the split axis

    def test_rebuild_after_threshold_insertions(self):
        tree = SpndTree()
        n = SpndConfig().rebuild_threshold + 1
        for t in range(n):
            tree.insert(t, n - t)
        assert tree.rebuilds == 1
        assert tree.inserts_since_rebuild == 1
        tree.check_invariants()
        assert len(tree) == n

    def test_rebuild_disabled_by_config(self):
        tree = SpndTree(SpndConfig(rebuild_threshold=None))
        for t in range(1000):
            tree.insert(t, 1000 - t)
        assert tree.rebuilds == 0

    def test_debug_insert_guard(self):
        tree = SpndTree(points=[(1, 1)], debug=True)
        with pytest.raises(AssertionError):
            tree.insert(2, 2)

    @given(st.lists(st.tuples(st.integers(0, 60), st.integers(0, 60)), min_size=1, max_size=200))
    @settings(max_examples=60)
    def test_matches_brute_force_filter(self, offers):
        tree = SpndTree(SpndConfig(leaf_capacity=4, rebuild_threshold=17))
        model = BruteForceFrontier()
        for x, y in offers:
            tree_says = tree.non_dom_prune(x, y)
            model_says = model.offer(x, y)
            assert tree_says == model_says
            if tree_says:
                tree.insert(x, y)
            tree.check_invariants()
        assert sorted(tree.points()) == sorted(model.points)


class SpndMachine(RuleBasedStateMachine):
    """Stateful comparison against the brute-force frontier model."""

    def __init__(self):
        super().__init__()
        self.tree = SpndTree(SpndConfig(leaf_capacity=3, max_children=3, rebuild_threshold=11))
        self.model = BruteForceFrontier()

    @rule(x=st.integers(0, 40), y=st.integers(0, 40))
    def offer(self, x, y):
        expected = self.model.offer(x, y)
        got = self.tree.non_dom_prune(x, y)
        assert got == expected
        if got:
            self.tree.insert(x, y)

    @invariant()
    def same_points(self):
        assert sorted(self.tree.points()) == sorted(self.model.points)
        self.tree.check_invariants()


TestSpndStateMachine = SpndMachine.TestCase


class TestTreeAlgorithms:
    @pytest.mark.parametrize("name", sorted(TREE_ALGORITHMS))
    @pytest.mark.parametrize("fixture", [FIG1, CONVEX_3X3, SINGLETONS], ids=lambda f: f.name)
    def test_fixtures(self, name, fixture):
        expected = reference_points(fixture.a, fixture.b)
        sink = CollectSink()
        k = TREE_ALGORITHMS[name](fixture.a, fixture.b, CheckingSink(sink))
        assert k == fixture.expected_k
        assert sink.result() == expected

    @given(st.integers(0, 2**32 - 1), st.integers(1, 16), st.integers(1, 16))
    @settings(max_examples=40)
    def test_random_instances(self, seed, na, nb):
        rng = np.random.default_rng(seed)
        a = make_pareto_set(rng, na)
        b = make_pareto_set(rng, nb)
        expected = reference_points(a, b)
        for name, algo in TREE_ALGORITHMS.items():
            sink = CollectSink()
            algo(a, b, CheckingSink(sink))
            assert sink.result() == expected, name

    def test_snd_rebuild_cadence_on_linear_inputs(self):
        # every cell survives, so insertions hit the rebuild threshold
        a, b = generate_pair("linear", 30, 5)
        stats = AlgoStats()
        nondomdc_sequential(a, b, CountSink(), stats=stats)
        assert stats.rebuilds == (30 * 30) // SpndConfig().rebuild_threshold
        dnd_stats = AlgoStats()
        nondomdc_doubling(a, b, CountSink(), stats=dnd_stats)
        assert dnd_stats.rebuilds == 0  # per-level trees are never rebuilt

    def test_intermediate_blowup_is_reported(self):
        # measured, not asserted: distribution-dependent constants
        a, b = generate_pair("sorted", 300, 17, "gaussian")
        k = len(reference_points(a, b))
        for name in ("snd", "dnd"):
            stats = AlgoStats()
            TREE_ALGORITHMS[name](a, b, CountSink(), stats=stats)
            assert stats.frontier_peak >= 1
            print(f"{name}: peak intermediate frontier = {stats.frontier_peak} "
                  f"({stats.frontier_peak / k:.2f} of k = {k})")

    def test_dnd_reports_level_peaks(self):
        a, b = generate_pair("sorted", 64, 3)
        stats = AlgoStats()
        nondomdc_doubling(a, b, CountSink(), stats=stats)
        assert len(stats.level_peaks) >= 6  # 64 columns halve per level
        assert max(stats.level_peaks) == stats.frontier_peak
