"""Output-sensitive Pareto sum computation for 2-D integer Pareto sets.

The Pareto sum of Pareto sets A and B is the non-dominated subset of their
pairwise-sum (Minkowski) matrix. This package provides a portfolio of exact
algorithms with output-sensitive space, reproducible instance generators, a
brute-force oracle for verification, and a benchmark CLI.
"""

from .base import (
    AlgoStats,
    binary_search,
    brute_force,
    kirkpatrick_seidel,
    priority_binary_search,
    sort_compare,
)
from .core import (
    CheckingSink,
    CollectSink,
    CountSink,
    MinkowskiView,
    ParetoSet,
    Point,
    PointSink,
    SearchRange,
    WriterSink,
    dominates,
    filter_sorted,
    merge_union,
    validate,
)
from .generators import GenSpec, GenerationBudgetError, generate, generate_pair
from .hull import ConvexChain, convex_minkowski, convex_seed, lower_hull
from .io import read_pareto_set, write_pareto_set
from .minplus import ConvInstance, lift, minplus_naive, minplus_via_pareto
from .ndtree import (
    SpndConfig,
    SpndTree,
    nondomdc_doubling,
    nondomdc_sequential,
    pareto_tree_filter,
)
from .oracles import (
    CONVEX_3X3,
    FIG1,
    SINGLETONS,
    Fixture,
    OracleSizeError,
    RangeMin,
    pareto_sum_reference,
    range_min_reference,
    reference_points,
)
from .registry import ALGORITHMS, run_algorithm
from .successive import (
    ColumnProbe,
    SweepOptions,
    column_probe,
    default_delta,
    hybrid_sss_sc,
    range_min_binary,
    range_min_sweep,
    successive,
    successive_binary_search,
    successive_sweep_search,
)

__version__ = "0.1.0"

__all__ = [
    "AlgoStats",
    "ALGORITHMS",
    "CheckingSink",
    "CollectSink",
    "ColumnProbe",
    "ConvInstance",
    "ConvexChain",
    "CONVEX_3X3",
    "CountSink",
    "FIG1",
    "Fixture",
    "GenSpec",
    "GenerationBudgetError",
    "MinkowskiView",
    "OracleSizeError",
    "ParetoSet",
    "Point",
    "PointSink",
    "RangeMin",
    "SearchRange",
    "SINGLETONS",
    "SpndConfig",
    "SpndTree",
    "SweepOptions",
    "WriterSink",
    "binary_search",
    "brute_force",
    "column_probe",
    "convex_minkowski",
    "convex_seed",
    "default_delta",
    "dominates",
    "filter_sorted",
    "generate",
    "generate_pair",
    "hybrid_sss_sc",
    "kirkpatrick_seidel",
    "lift",
    "lower_hull",
    "merge_union",
    "minplus_naive",
    "minplus_via_pareto",
    "nondomdc_doubling",
    "nondomdc_sequential",
    "pareto_sum_reference",
    "pareto_tree_filter",
    "priority_binary_search",
    "range_min_binary",
    "range_min_reference",
    "range_min_sweep",
    "read_pareto_set",
    "reference_points",
    "run_algorithm",
    "sort_compare",
    "successive",
    "successive_binary_search",
    "successive_sweep_search",
    "validate",
    "write_pareto_set",
]
