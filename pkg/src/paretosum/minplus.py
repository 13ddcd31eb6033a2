"""(min,+)-convolution solved through Pareto-sum computation.

Arrays a, b lift to Pareto sets A = {(i, a[i] + (n-i)U)} and
B = {(j, b[j] + (n-j)U)} with U = max(a) + max(b) + 1; the Pareto sum of
A, B then contains, for every x in 0..n-1, the point (x, c[x] + (2n-x)U)
with c[x] = min over i+j=x of a[i] + b[j]. Running any Pareto-sum
algorithm on the lifted sets and unlifting the first n x-slots therefore
solves the convolution, which is this module's executable correctness
witness (validated against the naive quadratic convolution).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .core import CollectSink, ParetoSet, PointSink

DEFAULT_VALUE_LIMIT = 2**20
_SUM_GUARD = 2**62

Algorithm = Callable[[ParetoSet, ParetoSet, PointSink], int]


class CoverageError(RuntimeError):
    """An x-slot in 0..n-1 is missing from the Pareto sum: that signals a
    bug in the Pareto-sum algorithm under test."""


@dataclass(frozen=True)
class ConvInstance:
    """Convolution input arrays with the overflow guard n * U < 2^62."""

    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        if len(self.a) != len(self.b) or len(self.a) == 0:
            raise ValueError("arrays must be non-empty and of equal length")
        if min(self.a) < 0 or min(self.b) < 0:
            raise ValueError("arrays must be non-negative")
        if self.n * self.u >= _SUM_GUARD:
            raise ValueError("instance too large: n * U must stay below 2^62")

    @classmethod
    def from_arrays(cls, a, b, *, value_limit: int = DEFAULT_VALUE_LIMIT) -> "ConvInstance":
        a = tuple(int(v) for v in a)
        b = tuple(int(v) for v in b)
        if a and b and (max(a) > value_limit or max(b) > value_limit):
            raise ValueError(f"values above the limit of {value_limit}")
        return cls(a, b)

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def u(self) -> int:
        return max(self.a) + max(self.b) + 1


def lift(inst: ConvInstance) -> tuple[ParetoSet, ParetoSet]:
    """Build the two Pareto sets whose Pareto sum encodes the convolution."""
    n = inst.n
    u = inst.u
    idx = np.arange(n, dtype=np.int64)
    ya = np.array(inst.a, dtype=np.int64) + (n - idx) * u
    yb = np.array(inst.b, dtype=np.int64) + (n - idx) * u
    return ParetoSet.from_arrays(idx, ya), ParetoSet.from_arrays(idx, yb)


def minplus_naive(inst: ConvInstance) -> list[int]:
    """Quadratic reference: c[x] = min over i+j=x of a[i] + b[j]."""
    a = np.array(inst.a, dtype=np.int64)
    b = np.array(inst.b, dtype=np.int64)
    n = inst.n
    out = []
    for x in range(n):
        lo = max(0, x - n + 1)
        out.append(int(np.min(a[lo : x + 1] + b[x - lo :: -1][: x + 1 - lo])))
    return out


def minplus_via_pareto(inst: ConvInstance, algorithm: Algorithm) -> list[int]:
    """Solve the convolution through the given Pareto-sum algorithm.

    Pareto-sum points with x >= n are ignored; a missing x in 0..n-1 raises
    CoverageError (the lifting guarantees coverage for correct algorithms).
    """
    lifted_a, lifted_b = lift(inst)
    sink = CollectSink()
    algorithm(lifted_a, lifted_b, sink)
    result = sink.result()
    n = inst.n
    u = inst.u
    out: list[int | None] = [None] * n
    for x, y in zip(result.xs.tolist(), result.ys.tolist()):
        if x < n:
            out[x] = y - (2 * n - x) * u
    missing = [x for x, v in enumerate(out) if v is None]
    if missing:
        raise CoverageError(f"Pareto sum left convolution slots {missing} uncovered")
    return out  # type: ignore[return-value]


def lifted_pareto_sum(inst: ConvInstance, algorithm: Algorithm) -> ParetoSet:
    """The raw Pareto sum of the lifted instance (|C| < 2n always holds)."""
    lifted_a, lifted_b = lift(inst)
    sink = CollectSink()
    algorithm(lifted_a, lifted_b, sink)
    return sink.result()
