"""Reproducible pseudo-random instance generators.

Five families: naive (filter random points), incremental (rejection-grow a
Pareto set), sorted (independent sorted coordinate sequences; uniform,
gaussian, exponential, or shifted-uniform), curve (y ~ K/x), and linear
(y = c - x). Identical GenSpec values produce byte-identical instances; the
RNG algorithm identifier is written into generated file headers.

Continuous samples are scaled to integers. Two constructions deviate from
their real-valued ideals to keep exact-integer Pareto structure inside the
32-bit coordinate bound: the curve family enforces strictly decreasing y
with a resolution floor, and the linear family gives the two pair roles
digit-separated x universes so that every cross-pair cell value is distinct
(pair output size is then exactly n_a * n_b).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .core import COORD_LIMIT, ParetoSet

RNG_ALGORITHM = "numpy-pcg64"

FAMILIES = ("naive", "incremental", "sorted", "curve", "linear")
DISTRIBUTIONS = ("uniform", "gaussian", "exponential", "shifted")

# function-family x values live in (0, 4n]: four grid positions per point
# keep seeds meaningful while the digit-separated linear universe still
# fits the coordinate bound (16 n^2 + 4 n < 2^31)
_X_RESOLUTION = 4
_LINEAR_MAX_N = 11585


class GenerationBudgetError(RuntimeError):
    """Rejection-sampling budget exhausted."""


@dataclass(frozen=True)
class GenSpec:
    """Full description of one generated instance (deterministic)."""

    family: str
    n: int
    seed: int
    distribution: str = "uniform"
    scale: int = 10**6
    role: str = "a"

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.distribution not in DISTRIBUTIONS:
            raise ValueError(f"unknown distribution {self.distribution!r}")
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.scale < 1:
            raise ValueError("scale must be >= 1")
        if self.role not in ("a", "b"):
            raise ValueError("role must be 'a' or 'b'")

    def header_lines(self) -> list[str]:
        return [
            "generated instance",
            f"family={self.family} distribution={self.distribution} n={self.n} "
            f"seed={self.seed} scale={self.scale} role={self.role} rng={RNG_ALGORITHM}",
        ]


def _unique_ints(rng: np.random.Generator, draw, n: int, what: str) -> np.ndarray:
    """Accumulate n distinct integers from repeated draws, in draw order."""
    seen: set[int] = set()
    out: list[int] = []
    rounds = 0
    while len(out) < n:
        rounds += 1
        if rounds > 64:
            raise GenerationBudgetError(
                f"could not draw {n} unique {what} values in 64 sampling rounds"
            )
        need = n - len(out)
        for v in draw(rng, int(1.25 * need) + 16).tolist():
            if v not in seen:
                seen.add(v)
                out.append(v)
                if len(out) == n:
                    break
    return np.array(out, dtype=np.int64)


def _staircase_mask(xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    """Keep-mask of the Pareto filter over a lexicographically sorted array."""
    keep = np.empty(len(xs), dtype=bool)
    keep[0] = True
    if len(xs) > 1:
        running = np.minimum.accumulate(ys)
        keep[1:] = ys[1:] < running[:-1]
    return keep


def gen_naive(spec: GenSpec) -> ParetoSet:
    """Sample n random points with coordinates in [0, n], keep the Pareto set.

    Output size is typically far below n (tens of points even at n = 10^7).
    """
    rng = np.random.default_rng(spec.seed)
    pts = rng.integers(0, spec.n + 1, size=(spec.n, 2), dtype=np.int64)
    xs, ys = pts[:, 0], pts[:, 1]
    order = np.lexsort((ys, xs))
    xs, ys = xs[order], ys[order]
    keep = _staircase_mask(xs, ys)
    return ParetoSet.from_arrays(xs[keep], ys[keep], check=False)


def gen_incremental(spec: GenSpec) -> ParetoSet:
    """Grow a Pareto set point by point with rejection sampling; exact size n.

    Every prefix of accepted points is itself a Pareto set. Impractical for
    large n; the attempt budget is max(100000, 1000 n) and exhausting it
    raises GenerationBudgetError.
    """
    from bisect import bisect_left

    rng = np.random.default_rng(spec.seed)
    hi = spec.n * spec.scale
    if hi >= COORD_LIMIT:
        hi = COORD_LIMIT - 1
    budget = max(100_000, 1000 * spec.n)
    xs: list[int] = []
    ys: list[int] = []
    attempts = 0
    while len(xs) < spec.n:
        attempts += 1
        if attempts > budget:
            raise GenerationBudgetError(
                f"incremental generator exhausted its budget of {budget} attempts "
                f"at size {len(xs)} of {spec.n}"
            )
        x = int(rng.integers(0, hi + 1))
        y = int(rng.integers(0, hi + 1))
        pos = bisect_left(xs, x)
        if pos < len(xs) and xs[pos] == x:
            continue
        if pos > 0 and ys[pos - 1] <= y:
            continue  # dominated by the left neighbor
        if pos < len(xs) and y <= ys[pos]:
            continue  # would dominate the right neighbor
        xs.insert(pos, x)
        ys.insert(pos, y)
    return ParetoSet.from_arrays(xs, ys)


def _shifted_y_bounds(n: int, scale: int) -> tuple[int, int]:
    """Per-role y-range upper bounds for the shifted-uniform distribution.

    Targets sqrt(n) * scale vs n^2 * scale; the wide side saturates at the
    coordinate bound and the narrow side is floored at 4n so that n unique
    integer values remain sampleable.
    """
    wide = min(n * n * scale, COORD_LIMIT - 1)
    narrow = max(4 * n, (wide * math.isqrt(n)) // (n * n))
    return narrow, min(wide, COORD_LIMIT - 1)


def gen_sorted(spec: GenSpec) -> ParetoSet:
    """Zip an increasing unique x-sequence with a decreasing unique y-sequence.

    Both sequences are drawn from the configured distribution; exact size n.
    """
    rng = np.random.default_rng(spec.seed)
    n = spec.n
    hi = min(max(spec.scale, 4 * n), COORD_LIMIT - 1)

    def uniform(r: np.random.Generator, m: int) -> np.ndarray:
        return r.integers(0, hi + 1, size=m, dtype=np.int64)

    def gaussian(r: np.random.Generator, m: int) -> np.ndarray:
        return np.rint(r.normal(hi / 2.0, hi / 6.0, size=m)).astype(np.int64)

    def exponential(r: np.random.Generator, m: int) -> np.ndarray:
        return np.rint(r.exponential(hi / math.log(100.0), size=m)).astype(np.int64)

    if spec.distribution == "shifted":
        narrow, wide = _shifted_y_bounds(n, spec.scale)
        y_hi = narrow if spec.role == "a" else wide

        def y_draw(r: np.random.Generator, m: int) -> np.ndarray:
            return r.integers(0, y_hi + 1, size=m, dtype=np.int64)

        x_draw = uniform
    elif spec.distribution == "uniform":
        x_draw = y_draw = uniform
    elif spec.distribution == "gaussian":
        x_draw = y_draw = gaussian
    else:
        x_draw = y_draw = exponential

    xs = np.sort(_unique_ints(rng, x_draw, n, f"{spec.distribution} x"))
    ys = -np.sort(-_unique_ints(rng, y_draw, n, f"{spec.distribution} y"))
    return ParetoSet.from_arrays(xs, ys)


def gen_function(spec: GenSpec) -> ParetoSet:
    """Curve (y ~ K/x) or linear (y = c - x) instances over random unique x.

    x is sampled from (0, 4n]. The curve scale K is floored at the value
    that makes floor(K/x) strictly decreasing, so no two points collide.
    The linear family multiplies role-b x values by (4n + 1), which makes
    every cross-pair sum distinct; a role-a/role-b pair therefore has a
    Pareto sum of exactly n_a * n_b points (all cells lie on one line).
    """
    rng = np.random.default_rng(spec.seed)
    n = spec.n
    x_hi = _X_RESOLUTION * n
    if spec.family == "linear" and n > _LINEAR_MAX_N:
        raise ValueError(
            f"linear generator supports n <= {_LINEAR_MAX_N} under the 32-bit coordinate bound"
        )
    xs = np.sort(rng.choice(x_hi, size=n, replace=False).astype(np.int64)) + 1
    if spec.family == "curve":
        k_scale = max(int(round(0.3 * spec.scale)), x_hi * (x_hi + 1))
        if k_scale >= COORD_LIMIT:
            raise ValueError(
                "curve generator cannot keep y values unique under the 32-bit "
                f"coordinate bound at n={n}"
            )
        ys = k_scale // xs
        return ParetoSet.from_arrays(xs, ys)
    # linear
    if spec.role == "b":
        xs = xs * np.int64(x_hi + 1)
    c = min(n * spec.scale, COORD_LIMIT - 1)
    ys = np.int64(c) - xs
    return ParetoSet.from_arrays(xs, ys)


_DISPATCH = {
    "naive": gen_naive,
    "incremental": gen_incremental,
    "sorted": gen_sorted,
    "curve": gen_function,
    "linear": gen_function,
}


def generate(spec: GenSpec) -> ParetoSet:
    """Generate the instance described by spec (deterministic)."""
    return _DISPATCH[spec.family](spec)


def generate_pair(
    family: str,
    n: int,
    seed: int,
    distribution: str = "uniform",
    scale: int = 10**6,
) -> tuple[ParetoSet, ParetoSet]:
    """Generate the (A, B) input pair for one benchmark instance.

    B uses seed + 1. For the shifted distribution and the linear family the
    two sides take roles 'a' and 'b' (narrow/wide y-ranges, digit-separated
    x universes respectively).
    """
    dist = distribution if family == "sorted" else "uniform"
    spec_a = GenSpec(family=family, n=n, seed=seed, distribution=dist, scale=scale, role="a")
    spec_b = replace(spec_a, seed=seed + 1, role="b")
    return generate(spec_a), generate(spec_b)
