"""Dominating-set optimization toolkit.

Heuristics for minimum (weight) dominating sets built around a permutation
decoder: greedy construction, order-based local search with jump moves, a
multi-start weighted variant, and ant colony optimization — plus random
instance generators, an LP-relaxation exporter for lower bounds, a small
exact solver for cross-checking, and a batch experiment harness.

Hot loops run in a compiled extension when available and fall back to pure
Python otherwise (see :mod:`domset.kernels`; set ``DOMSET_PURE_PYTHON=1`` to
force the fallback).  All randomized components share one seedable,
platform-independent generator, so equal seeds give equal results.
"""

from .aco import (
    AcoConfig,
    PheromoneState,
    aco_run,
    construct_ant_solution,
    pheromone_update,
    preprocess_independent_sets,
    remove_redundant,
)
from .clusters import assign_clusters, to_dot
from .experiments import (
    ExperimentSpec,
    RunRecord,
    aggregate,
    format_aggregate,
    run_experiment,
    write_csv,
)
from .generators import (
    BAParams,
    UnitDiskParams,
    WeightedRandomParams,
    gen_ba,
    gen_unit_disk,
    gen_weighted_random,
    unit_disk_from_points,
)
from .graph import (
    Graph,
    GraphFormatError,
    LoadReport,
    Solution,
    coverage_gain,
    is_dominating_set,
    load_graph,
    read_solution,
    redundant_vertices,
    write_edge_list,
    write_solution,
    write_weighted_instance,
)
from .greedy import GreedyStats, greedy_mds, greedy_mwds, repeated_greedy
from .kernels import BACKEND
from .lp import LpModel, emit_lp, ingest_bound, parse_lp, read_bound_file, write_lp_file
from .msrls import MsrlsoConfig, msrlso_run
from .oracle import brute_force_mds, brute_force_mwds
from .order_search import (
    Permutation,
    RlsoConfig,
    RunTrace,
    greedy_map,
    jump,
    rlso_run,
    set_to_permutation,
)
from .rng import Xoshiro256StarStar, child_seed

__version__ = "0.1.0"

__all__ = [
    "AcoConfig",
    "BACKEND",
    "BAParams",
    "ExperimentSpec",
    "Graph",
    "GraphFormatError",
    "GreedyStats",
    "LoadReport",
    "LpModel",
    "MsrlsoConfig",
    "Permutation",
    "PheromoneState",
    "RlsoConfig",
    "RunRecord",
    "RunTrace",
    "Solution",
    "UnitDiskParams",
    "WeightedRandomParams",
    "Xoshiro256StarStar",
    "aco_run",
    "aggregate",
    "assign_clusters",
    "brute_force_mds",
    "brute_force_mwds",
    "child_seed",
    "construct_ant_solution",
    "coverage_gain",
    "emit_lp",
    "format_aggregate",
    "gen_ba",
    "gen_unit_disk",
    "gen_weighted_random",
    "greedy_map",
    "greedy_mds",
    "greedy_mwds",
    "ingest_bound",
    "is_dominating_set",
    "jump",
    "load_graph",
    "msrlso_run",
    "parse_lp",
    "pheromone_update",
    "preprocess_independent_sets",
    "read_bound_file",
    "read_solution",
    "redundant_vertices",
    "remove_redundant",
    "repeated_greedy",
    "rlso_run",
    "run_experiment",
    "set_to_permutation",
    "to_dot",
    "unit_disk_from_points",
    "write_csv",
    "write_edge_list",
    "write_lp_file",
    "write_solution",
    "write_weighted_instance",
    "__version__",
]
