"""Approximation algorithms for partitioning a graph into paths of at most k vertices."""

from .builders import EdgeGuarantee, PathPartition, cut_to_kpp, verify_partition
from .estimator import KPathPartitioner, check_graph, check_k
from .exact import R, Surd
from .graph import (
    Graph,
    GraphFormatError,
    connected_components,
    format_edge_list,
    induced_subgraph,
    parse_edge_list,
    random_graph,
)
from .oracle import optimal_kpp, optimal_kppe
from .pipeline import SolveReport, ratio_bound, ratio_table, solve

__all__ = [
    "EdgeGuarantee", "Graph", "GraphFormatError", "KPathPartitioner", "PathPartition", "R",
    "SolveReport", "Surd", "check_graph", "check_k", "connected_components", "cut_to_kpp",
    "format_edge_list", "induced_subgraph", "optimal_kpp", "optimal_kppe", "parse_edge_list",
    "random_graph", "ratio_bound", "ratio_table", "solve", "verify_partition",
]
