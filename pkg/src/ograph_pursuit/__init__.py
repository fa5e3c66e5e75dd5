"""Exact cops-and-robbers pursuit on oriented and general digraphs."""

from .bounds import (BoundReport, digraph_lower_bounds, domination_number,
                     independence_number, undirected_bounds)
from .digraph import (Digraph, Graph, bidirected, contract, directed_distance,
                      enumerate_orientations, is_strongly_connected,
                      strong_components, structure_profile)
from .families import (alternating_bfs_orientation, basic_family,
                       copwin_orientation, directed_cycle, directed_path,
                       fig1_counterexample, fig2_distance, fig3_revisit,
                       four_block_projective, in_star,
                       independent_set_source_orientation, out_star,
                       petersen_underlying, projective_incidence_orientation,
                       random_connected_graph, random_outerplanar_strong,
                       random_strong_ograph, random_tournament, ring_digraph,
                       sts_tournament, transitive_tournament)
from .papercheck import PaperCheckResult, run_papercheck
from .solver import (FULLY_ACTIVE, STANDARD, Confinement, GameSpec, GameTable,
                     ResourceLimitError, capture_time, cop_number,
                     is_cop_dominated, safe_vertex_check, solve_game)
from .traces import (PlayTrace, TraceAnalysis, enumerate_optimal_traces,
                     extract_trace, optimal_trace_analysis)
from .transforms import (ContractionSequence, CoresetPartition,
                         contraction_sequence, coreset_partition,
                         edge_cop_number, line_digraph)

__version__ = "0.1.0"

__all__ = [
    "Digraph", "Graph", "bidirected", "contract", "directed_distance",
    "enumerate_orientations", "is_strongly_connected", "strong_components",
    "structure_profile",
    "FULLY_ACTIVE", "STANDARD", "Confinement", "GameSpec", "GameTable",
    "ResourceLimitError", "capture_time", "cop_number", "is_cop_dominated",
    "safe_vertex_check", "solve_game",
    "PlayTrace", "TraceAnalysis", "enumerate_optimal_traces", "extract_trace",
    "optimal_trace_analysis",
    "alternating_bfs_orientation", "basic_family", "copwin_orientation",
    "directed_cycle", "directed_path", "fig1_counterexample", "fig2_distance",
    "fig3_revisit", "four_block_projective", "in_star",
    "independent_set_source_orientation", "out_star", "petersen_underlying",
    "projective_incidence_orientation", "random_connected_graph",
    "random_outerplanar_strong", "random_strong_ograph", "random_tournament",
    "ring_digraph", "sts_tournament", "transitive_tournament",
    "ContractionSequence", "CoresetPartition", "contraction_sequence",
    "coreset_partition", "edge_cop_number", "line_digraph",
    "BoundReport", "digraph_lower_bounds", "domination_number",
    "independence_number", "undirected_bounds",
    "PaperCheckResult", "run_papercheck",
    "__version__",
]
