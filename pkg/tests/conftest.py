import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from paretosum import ParetoSet, _kernels

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    _kernels.warm()


def make_pareto_set(rng: np.random.Generator, n: int, hi: int | None = None) -> ParetoSet:
    """Random sorted staircase with n points."""
    hi = hi if hi is not None else max(4 * n, 16)
    xs = np.sort(rng.choice(hi, size=n, replace=False))
    ys = -np.sort(rng.choice(hi, size=n, replace=False))
    return ParetoSet.from_arrays(xs.astype(np.int64), ys.astype(np.int64))


def staircase_from_sets(xs: set[int], ys: set[int]) -> ParetoSet:
    """Deterministic staircase built from two value sets of equal size."""
    n = min(len(xs), len(ys))
    return ParetoSet.from_arrays(sorted(xs)[:n], sorted(ys, reverse=True)[:n])
