"""Uniform name -> runner mapping over the whole algorithm portfolio.

Every runner has the signature
``runner(a, b, sink, *, delta=None, k_hint=None, stats=None) -> k``
and ignores options that do not apply to it. The KS runner computes its
k_hint with a silent sort & compare pass when none is supplied; benchmarks
that want that precomputation timed separately pass k_hint explicitly.
"""

from __future__ import annotations

from typing import Callable, Optional

from .base import AlgoStats, binary_search, brute_force, kirkpatrick_seidel, priority_binary_search, sort_compare
from .core import CountSink, ParetoSet, PointSink
from .ndtree import nondomdc_doubling, nondomdc_sequential, pareto_tree_filter
from .successive import SweepOptions, hybrid_sss_sc, successive_binary_search, successive_sweep_search

Runner = Callable[..., int]


def _options(delta: Optional[int]) -> Optional[SweepOptions]:
    return None if delta is None else SweepOptions(delta=delta)


def _bf(a, b, sink, *, delta=None, k_hint=None, stats=None):
    return brute_force(a, b, sink, stats=stats)


def _bs(a, b, sink, *, delta=None, k_hint=None, stats=None):
    return binary_search(a, b, sink, stats=stats)


def _pbs(a, b, sink, *, delta=None, k_hint=None, stats=None):
    return priority_binary_search(a, b, sink, stats=stats)


def _sc(a, b, sink, *, delta=None, k_hint=None, stats=None):
    return sort_compare(a, b, sink, stats=stats)


def _ks(a, b, sink, *, delta=None, k_hint=None, stats=None):
    if k_hint is None:
        counter = CountSink()
        sort_compare(a, b, counter)
        k_hint = counter.count
    return kirkpatrick_seidel(a, b, k_hint, sink, stats=stats)


def _sbs(a, b, sink, *, delta=None, k_hint=None, stats=None):
    return successive_binary_search(a, b, sink, stats=stats)


def _sss(a, b, sink, *, delta=None, k_hint=None, stats=None):
    return successive_sweep_search(a, b, sink, options=_options(delta), stats=stats)


def _hybrid(a, b, sink, *, delta=None, k_hint=None, stats=None):
    return hybrid_sss_sc(a, b, sink, options=_options(delta), stats=stats)


def _ptree(a, b, sink, *, delta=None, k_hint=None, stats=None):
    return pareto_tree_filter(a, b, sink, stats=stats)


def _snd(a, b, sink, *, delta=None, k_hint=None, stats=None):
    return nondomdc_sequential(a, b, sink, stats=stats)


def _dnd(a, b, sink, *, delta=None, k_hint=None, stats=None):
    return nondomdc_doubling(a, b, sink, stats=stats)


ALGORITHMS: dict[str, Runner] = {
    "bf": _bf,
    "bs": _bs,
    "pbs": _pbs,
    "sc": _sc,
    "ks": _ks,
    "sbs": _sbs,
    "sss": _sss,
    "hybrid": _hybrid,
    "ptree": _ptree,
    "snd": _snd,
    "dnd": _dnd,
}


def run_algorithm(
    name: str,
    a: ParetoSet,
    b: ParetoSet,
    sink: PointSink,
    *,
    delta: Optional[int] = None,
    k_hint: Optional[int] = None,
    stats: Optional[AlgoStats] = None,
) -> int:
    try:
        runner = ALGORITHMS[name]
    except KeyError:
        raise ValueError(f"unknown algorithm {name!r}; choose from {sorted(ALGORITHMS)}") from None
    return runner(a, b, sink, delta=delta, k_hint=k_hint, stats=stats)
