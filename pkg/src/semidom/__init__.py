"""Semitotal domination toolkit.

Exact oracle, polynomial interval-graph solver, logarithmic-ratio greedy
approximation, and gadget constructions relating semitotal domination to
domination, total domination and vertex cover.
"""

from .approx import (SetCoverInstance, algo_dom_set, approx_semitotal,
                     build_semitotal_setcover, greedy_dominating_set,
                     greedy_set_cover)
from .domination import (DominationKind, VerificationReport, ViolationReason,
                         exact_min, verify)
from .errors import InfeasibleError, SizeCapError
from .graph import (Graph, SplitPartition, bfs_distance, connected_components,
                    is_connected, neighborhood_within)
from .intervals import IntervalModel, canonicalize_intervals, intersection_graph
from .interval_solver import (ArcClass, OverlapDigraph, SplitDigraph,
                              build_overlap_digraph, build_split_digraph,
                              contains_all, shortest_constrained_path,
                              solve_interval)
from .generators import (SplitMix64, gen_connected_graph, gen_interval_model,
                         gen_named, gen_split_graph)
from .reductions import (GadgetKind, GadgetOutput, ReductionReport,
                         build_gadget, check_reduction, extend_solution,
                         extract_solution, min_vertex_cover)

__version__ = "0.1.0"

__all__ = [
    "ArcClass", "DominationKind", "GadgetKind", "GadgetOutput", "Graph",
    "InfeasibleError", "IntervalModel", "OverlapDigraph", "ReductionReport",
    "SetCoverInstance", "SizeCapError", "SplitDigraph", "SplitMix64",
    "SplitPartition", "VerificationReport", "ViolationReason", "algo_dom_set",
    "approx_semitotal", "bfs_distance", "build_gadget", "build_overlap_digraph",
    "build_semitotal_setcover", "build_split_digraph", "canonicalize_intervals",
    "check_reduction", "connected_components", "contains_all", "exact_min",
    "extend_solution", "extract_solution", "gen_connected_graph",
    "gen_interval_model", "gen_named", "gen_split_graph",
    "greedy_dominating_set", "greedy_set_cover", "intersection_graph",
    "is_connected", "min_vertex_cover", "neighborhood_within",
    "shortest_constrained_path", "solve_interval", "verify",
]
