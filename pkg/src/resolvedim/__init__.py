"""Exact solvers, closed-form catalog, and verification suites for
metric, adjacency, distance-k, and broadcast dimension of finite
simple graphs."""

from .families import FAMILIES, FamilySpec, generate
from .formulas import (
    FormulaQuery,
    FormulaResult,
    adim_labeling_certificate,
    bound_report,
    catalog_families,
    characterize_small,
    closed_form,
    spider_bdim,
    tree_dim,
    verify_zhang_structure,
)
from .graphio import graph_to_edge_list, graph_to_json, parse_graph
from .graphs import (
    DistanceMatrix,
    Graph,
    MetricProfile,
    TreeProfile,
    TwinPartition,
    all_pairs_distances,
    build_graph,
    cartesian_product,
    clique_number,
    complement,
    delta_prime,
    disjoint_union,
    induced_subgraph,
    join,
    metric_profile,
    tree_profile,
    truncated_distance,
    twin_partition,
)
from .resolution import (
    Broadcast,
    Verdict,
    broadcast_code,
    counting_feasible,
    is_adjacency_resolving_set,
    is_resolving_broadcast,
    is_resolving_set,
)
from .solvers import (
    EnumerationResult,
    SolverResult,
    broadcast_value_caps,
    delete_edge,
    delete_vertex,
    enumerate_min_broadcasts,
    flatten_path_cycle_broadcast,
    revalidate,
    solve_adim,
    solve_bdim,
    solve_dim,
    solve_dim_k,
)
from .verify import SUITES, VerifyContext, naive_min_broadcasts, run_suites

__version__ = "0.1.0"

__all__ = [
    "Broadcast",
    "DistanceMatrix",
    "EnumerationResult",
    "FAMILIES",
    "FamilySpec",
    "FormulaQuery",
    "FormulaResult",
    "Graph",
    "MetricProfile",
    "SUITES",
    "SolverResult",
    "TreeProfile",
    "TwinPartition",
    "Verdict",
    "VerifyContext",
    "__version__",
    "adim_labeling_certificate",
    "all_pairs_distances",
    "bound_report",
    "broadcast_code",
    "broadcast_value_caps",
    "build_graph",
    "cartesian_product",
    "catalog_families",
    "characterize_small",
    "clique_number",
    "closed_form",
    "complement",
    "counting_feasible",
    "delete_edge",
    "delete_vertex",
    "delta_prime",
    "disjoint_union",
    "enumerate_min_broadcasts",
    "flatten_path_cycle_broadcast",
    "generate",
    "graph_to_edge_list",
    "graph_to_json",
    "induced_subgraph",
    "is_adjacency_resolving_set",
    "is_resolving_broadcast",
    "is_resolving_set",
    "join",
    "metric_profile",
    "naive_min_broadcasts",
    "parse_graph",
    "revalidate",
    "run_suites",
    "solve_adim",
    "solve_bdim",
    "solve_dim",
    "solve_dim_k",
    "spider_bdim",
    "tree_dim",
    "tree_profile",
    "truncated_distance",
    "twin_partition",
    "verify_zhang_structure",
]
