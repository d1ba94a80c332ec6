"""Exact Ollivier curvature, edge betweenness and the average-distance bound.

For a finite connected graph the betweenness-weighted mean curvature times
the mean distance never exceeds the mean degree; this package computes all
three quantities exactly and decides the equality case.
"""

from .curvature import average_curvature_weighted, curvature_all_edges, curvature_oracle, ollivier_curvature
from .families import (
    gen_cocktail_party,
    gen_complete,
    gen_cycle,
    gen_erdos_renyi_connected,
    gen_gosset,
    gen_halved_cube,
    gen_hypercube,
    gen_johnson,
    gen_path,
    gen_schlafli,
)
from .graph import Graph, build_graph, cartesian_product, read_edge_list, write_edge_list
from .kernels import BACKEND
from .metrics import all_pairs, average_degree, average_distance, edge_betweenness
from .report import AnalysisReport, analyze, fuzz_inequality
from .rigidity import check_sharpness, is_reflective

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "BACKEND",
    "Graph",
    "all_pairs",
    "analyze",
    "average_curvature_weighted",
    "average_degree",
    "average_distance",
    "build_graph",
    "cartesian_product",
    "check_sharpness",
    "curvature_all_edges",
    "curvature_oracle",
    "edge_betweenness",
    "fuzz_inequality",
    "gen_cocktail_party",
    "gen_complete",
    "gen_cycle",
    "gen_erdos_renyi_connected",
    "gen_gosset",
    "gen_halved_cube",
    "gen_hypercube",
    "gen_johnson",
    "gen_path",
    "gen_schlafli",
    "is_reflective",
    "ollivier_curvature",
    "read_edge_list",
    "write_edge_list",
]
