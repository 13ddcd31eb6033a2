"""The (min,+)-convolution correctness witness."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from paretosum import (
    CollectSink,
    ConvInstance,
    lift,
    minplus_naive,
    minplus_via_pareto,
    sort_compare,
    successive_sweep_search,
    validate,
)
from paretosum.minplus import CoverageError, lifted_pareto_sum

ALGORITHMS = {
    "sc": sort_compare,
    "sss": successive_sweep_search,
}


class TestLift:
    def test_worked_example(self):
        inst = ConvInstance.from_arrays([1, 3, 2], [0, 5, 1])
        assert inst.u == 9
        a, b = lift(inst)
        assert a.points == [(0, 28), (1, 21), (2, 11)]
        assert b.points == [(0, 27), (1, 23), (2, 10)]

    def test_singleton_zero(self):
        inst = ConvInstance.from_arrays([0], [0])
        assert inst.u == 1
        a, b = lift(inst)
        assert a.points == [(0, 1)] and b.points == [(0, 1)]

    def test_equal_singletons(self):
        inst = ConvInstance.from_arrays([5], [5])
        assert inst.u == 11
        a, b = lift(inst)
        assert a.points == b.points == [(0, 16)]

    @given(st.lists(st.integers(0, 1000), min_size=1, max_size=50))
    def test_lifted_sets_are_valid(self, values):
        inst = ConvInstance.from_arrays(values, list(reversed(values)))
        a, b = lift(inst)
        assert validate(a.points) and validate(b.points)


class TestViaPareto:
    def test_worked_example(self):
        inst = ConvInstance.from_arrays([1, 3, 2], [0, 5, 1])
        # lifted Pareto sum, checked by hand against the 3x3 matrix
        assert lifted_pareto_sum(inst, sort_compare).points == [
            (0, 55), (1, 48), (2, 38), (3, 31), (4, 21),
        ]
        assert minplus_via_pareto(inst, sort_compare) == [1, 3, 2]
        assert minplus_naive(inst) == [1, 3, 2]

    def test_single_element(self):
        inst = ConvInstance.from_arrays([4], [9])
        assert minplus_via_pareto(inst, sort_compare) == [13]

    @pytest.mark.parametrize("name", sorted(ALGORITHMS))
    @given(seed=st.integers(0, 2**32 - 1), n=st.integers(1, 200))
    @settings(max_examples=30)
    def test_matches_naive(self, name, seed, n):
        rng = np.random.default_rng(seed)
        inst = ConvInstance.from_arrays(
            rng.integers(0, 2**20, size=n).tolist(),
            rng.integers(0, 2**20, size=n).tolist(),
        )
        assert minplus_via_pareto(inst, ALGORITHMS[name]) == minplus_naive(inst)

    @given(seed=st.integers(0, 2**32 - 1), n=st.integers(1, 120))
    @settings(max_examples=30)
    def test_lifted_output_smaller_than_2n(self, seed, n):
        rng = np.random.default_rng(seed)
        inst = ConvInstance.from_arrays(
            rng.integers(0, 5000, size=n).tolist(), rng.integers(0, 5000, size=n).tolist()
        )
        assert len(lifted_pareto_sum(inst, sort_compare)) < 2 * n

    def test_coverage_violation_is_reported(self):
        inst = ConvInstance.from_arrays([1, 3, 2], [0, 5, 1])

        def broken(a, b, sink):
            # drops the first point: x = 0 goes missing
            full = CollectSink()
            sort_compare(a, b, full)
            for x, y in full.points[1:]:
                sink.emit(x, y)
            return len(full.points) - 1

        with pytest.raises(CoverageError):
            minplus_via_pareto(inst, broken)


class TestGuards:
    def test_value_limit(self):
        with pytest.raises(ValueError):
            ConvInstance.from_arrays([2**21], [0])
        ConvInstance.from_arrays([2**21], [0], value_limit=2**22)

    def test_overflow_guard(self):
        big = 2**52
        with pytest.raises(ValueError) as err:
            ConvInstance.from_arrays([big] * 512, [big] * 512, value_limit=2**53)
        assert "2^62" in str(err.value)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            ConvInstance.from_arrays([-1], [0])

    def test_shape_mismatch_rejected(self):
        with pytest.raises(ValueError):
            ConvInstance.from_arrays([1, 2], [1])
