"""Range-minimum oracles, the successive drivers, delta-skipping, and the
SSS-to-SC hybrid."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from paretosum import (
    AlgoStats,
    CheckingSink,
    CollectSink,
    CountSink,
    MinkowskiView,
    ParetoSet,
    SearchRange,
    SweepOptions,
    column_probe,
    hybrid_sss_sc,
    range_min_binary,
    range_min_reference,
    range_min_sweep,
    reference_points,
    successive,
    successive_binary_search,
    successive_sweep_search,
)
from paretosum.generators import GenSpec, generate
from paretosum.oracles import CONVEX_3X3, FIG1, SINGLETONS

from conftest import make_pareto_set


def deltas_for(n: int) -> list[int]:
    return sorted({1, 2, math.isqrt(max(n, 1)) + 1, max(n, 1)})


class TestRangeMinOracles:
    def test_fig6_range(self):
        m = MinkowskiView(FIG1.a, FIG1.b)
        r = SearchRange(x_min=14, y_max=44)
        for hit in (
            range_min_binary(m, r),
            range_min_sweep(m, r, SweepOptions(delta=1)),
            range_min_sweep(m, r, SweepOptions(delta=3)),
        ):
            assert hit is not None and hit.point == (15, 43)
            assert m.cell(hit.i, hit.j) == hit.point

    def test_beyond_last_corner_is_absent(self):
        m = MinkowskiView(FIG1.a, FIG1.b)
        r = SearchRange(x_min=53, y_max=15)
        assert range_min_binary(m, r) is None
        assert range_min_sweep(m, r) is None

    def test_three_by_three_full_range(self):
        m = MinkowskiView(CONVEX_3X3.a, CONVEX_3X3.b)
        r = SearchRange(x_min=0, y_max=6)
        assert range_min_binary(m, r).point == (1, 4)
        assert range_min_sweep(m, r).point == (1, 4)

    @given(
        st.integers(0, 2**32 - 1),
        st.integers(1, 16),
        st.integers(1, 16),
        st.booleans(),
        st.booleans(),
    )
    @settings(max_examples=120)
    def test_oracles_match_reference_on_random_ranges(self, seed, na, nb, with_xmax, with_ymin):
        rng = np.random.default_rng(seed)
        a = make_pareto_set(rng, na)
        b = make_pareto_set(rng, nb)
        m = MinkowskiView(a, b)
        lo_x = int(a.xs[0] + b.xs[0])
        hi_x = int(a.xs[-1] + b.xs[-1])
        lo_y = int(a.ys[-1] + b.ys[-1])
        hi_y = int(a.ys[0] + b.ys[0])
        r = SearchRange(
            x_min=int(rng.integers(lo_x - 2, hi_x + 3)),
            y_max=int(rng.integers(lo_y - 2, hi_y + 3)),
            x_max=int(rng.integers(lo_x - 2, hi_x + 3)) if with_xmax else None,
            y_min=int(rng.integers(lo_y - 2, hi_y + 3)) if with_ymin else None,
        )
        expected = range_min_reference(m, r)
        got_binary = range_min_binary(m, r)
        assert (got_binary is None) == (expected is None)
        if expected is not None:
            assert got_binary.point == expected.point
        for delta in deltas_for(max(na, nb)):
            got_sweep = range_min_sweep(m, r, SweepOptions(delta=delta))
            assert (got_sweep is None) == (expected is None)
            if expected is not None:
                assert got_sweep.point == expected.point

    def test_column_probe_matches_range_semantics(self):
        m = MinkowskiView(FIG1.a, FIG1.b)
        r = SearchRange(x_min=14, y_max=44, x_max=40, y_min=20)
        for j in range(m.n_b):
            probe = column_probe(m, j, r)
            rows = [i for i in range(m.n_a) if r.contains(m.cell(i, j))]
            assert probe.first_in_range() == (rows[0] if rows else None)


class TestSuccessive:
    @pytest.mark.parametrize("oracle", ["binary", "sweep"])
    @pytest.mark.parametrize("fixture", [FIG1, CONVEX_3X3, SINGLETONS], ids=lambda f: f.name)
    def test_fixtures(self, oracle, fixture):
        expected = reference_points(fixture.a, fixture.b)
        sink = CollectSink()
        stats = AlgoStats()
        k = successive(fixture.a, fixture.b, CheckingSink(sink), oracle=oracle, stats=stats)
        assert sink.result() == expected
        assert k == len(expected)
        assert stats.oracle_calls == k

    def test_fig1_first_and_last(self):
        sink = CollectSink()
        successive_sweep_search(FIG1.a, FIG1.b, sink)
        pts = sink.points
        assert len(pts) == 25
        assert pts[0] == (1, 60) and pts[-1] == (53, 15)
        assert (15, 43) in pts

    @given(st.integers(0, 2**32 - 1), st.integers(1, 18), st.integers(1, 18))
    @settings(max_examples=60)
    def test_random_instances(self, seed, na, nb):
        rng = np.random.default_rng(seed)
        a = make_pareto_set(rng, na)
        b = make_pareto_set(rng, nb)
        expected = reference_points(a, b)
        for oracle in ("binary", "sweep"):
            sink = CollectSink()
            successive(a, b, CheckingSink(sink), oracle=oracle)
            assert sink.result() == expected
        for delta in deltas_for(max(na, nb)):
            sink = CollectSink()
            successive_sweep_search(a, b, CheckingSink(sink), options=SweepOptions(delta=delta))
            assert sink.result() == expected

    def test_duplicate_cells_suppressed_structurally(self):
        # a linear instance paired with itself: symmetric index pairs give
        # duplicate cell values, which the shrinking range must skip
        a = generate(GenSpec("linear", 20, 3))
        expected = reference_points(a, a)
        assert len(expected) < 20 * 20
        sink = CheckingSink()  # raises on any non-increasing emission
        k = successive_sweep_search(a, a, sink)
        assert k == len(expected)

    def test_sweep_inspection_bound(self):
        rng = np.random.default_rng(11)
        for na, nb in ((40, 40), (13, 60), (60, 13)):
            a = make_pareto_set(rng, na)
            b = make_pareto_set(rng, nb)
            k_total = len(reference_points(a, b))
            for delta in deltas_for(max(na, nb)):
                stats = AlgoStats()
                successive_sweep_search(a, b, CountSink(), options=SweepOptions(delta=delta), stats=stats)
                bound = (2 * (na + nb) + nb) * stats.oracle_calls
                assert stats.cells <= bound
                assert stats.oracle_calls == k_total

    def test_delta_validation(self):
        with pytest.raises(ValueError):
            SweepOptions(delta=0)


class TestHybrid:
    def test_fig1_falls_back_to_sort_compare(self):
        # k = 25 > max(n_a, n_b) = 10, so phase one cannot finish
        expected = reference_points(FIG1.a, FIG1.b)
        sink = CollectSink()
        stats = AlgoStats()
        k = hybrid_sss_sc(FIG1.a, FIG1.b, CheckingSink(sink), stats=stats)
        assert sink.result() == expected and k == 25
        assert stats.oracle_calls == 10  # exhausted budget
        assert stats.heap_peak > 0  # sort & compare ran

    def test_small_output_completes_in_phase_one(self):
        # singleton B translates A, so k equals max(n_a, n_b) exactly: the
        # oracle budget suffices and phase one finishes the whole sum
        a = make_pareto_set(np.random.default_rng(42), 100)
        b = ParetoSet([(5, 7)])
        expected = reference_points(a, b)
        assert len(expected) == 100
        sink = CollectSink()
        stats = AlgoStats()
        hybrid_sss_sc(a, b, CheckingSink(sink), stats=stats)
        assert sink.result() == expected
        assert stats.oracle_calls <= 100
        assert stats.heap_peak == 0  # no fallback

    def test_singletons_complete_in_phase_one(self):
        stats = AlgoStats()
        sink = CollectSink()
        k = hybrid_sss_sc(ParetoSet([(0, 0)]), ParetoSet([(9, 9)]), sink, stats=stats)
        assert k == 1 and sink.points == [(9, 9)]
        assert stats.oracle_calls == 1 and stats.heap_peak == 0

    @given(st.integers(0, 2**32 - 1), st.integers(1, 18), st.integers(1, 18))
    @settings(max_examples=40)
    def test_random_instances(self, seed, na, nb):
        rng = np.random.default_rng(seed)
        a = make_pareto_set(rng, na)
        b = make_pareto_set(rng, nb)
        sink = CollectSink()
        hybrid_sss_sc(a, b, CheckingSink(sink))
        assert sink.result() == reference_points(a, b)
