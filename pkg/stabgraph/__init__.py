from stabgraph.graph import (
    Edge,
    EdgePair,
    Graph,
    GraphError,
    add_edge,
    add_edges,
    girth,
    has_c4,
    has_hamiltonian_path,
    induced_subgraph,
    is_isomorphic,
    pendant_data,
    remove_vertices,
)
from stabgraph.encoding import (
    GraphFormatError,
    parse_edge_list,
    parse_graph6,
    to_dot,
    to_edge_list,
    to_graph6,
)
from stabgraph.named import make_named, named_catalogue
from stabgraph.stable_sets import (
    BudgetExceededError,
    StableSetFamily,
    Verdict,
    core_avoidable_pairs,
    is_very_well_covered,
    is_well_covered,
    max_stable_sets,
    stability_number,
)
from stabgraph.matching import MatchingResult, maximum_matching, pendant_perfect_matching
from stabgraph.classifier import (
    CoverWitness,
    InvariantError,
    KEDecomposition,
    PlusClass,
    PreconditionError,
    StabilityReport,
    alpha1_g0_characterization,
    classify_full,
    cover_criterion_p3,
    cover_criterion_plus_plus,
    fast_alpha_plus,
    fast_plus_plus_bipartite,
    fast_plus_plus_ke,
    fast_plus_plus_pendant,
    girth6_panel,
    is_koenig_egervary,
    ke_decompose,
    oracle_alpha_plus,
    oracle_p3_plus,
    oracle_plus_plus,
)
from stabgraph.populations import enumerate_graphs, random_graphs
from stabgraph.suites import SUITES, VerificationOutcome, run_suite
from stabgraph.report import GraphRecord, ReportDocument

__all__ = [
    "Edge",
    "EdgePair",
    "Graph",
    "GraphError",
    "add_edge",
    "add_edges",
    "girth",
    "has_c4",
    "has_hamiltonian_path",
    "induced_subgraph",
    "is_isomorphic",
    "pendant_data",
    "remove_vertices",
    "GraphFormatError",
    "parse_edge_list",
    "parse_graph6",
    "to_dot",
    "to_edge_list",
    "to_graph6",
    "make_named",
    "named_catalogue",
    "BudgetExceededError",
    "StableSetFamily",
    "Verdict",
    "core_avoidable_pairs",
    "is_very_well_covered",
    "is_well_covered",
    "max_stable_sets",
    "stability_number",
    "MatchingResult",
    "maximum_matching",
    "pendant_perfect_matching",
    "CoverWitness",
    "InvariantError",
    "KEDecomposition",
    "PlusClass",
    "PreconditionError",
    "StabilityReport",
    "alpha1_g0_characterization",
    "classify_full",
    "cover_criterion_p3",
    "cover_criterion_plus_plus",
    "fast_alpha_plus",
    "fast_plus_plus_bipartite",
    "fast_plus_plus_ke",
    "fast_plus_plus_pendant",
    "girth6_panel",
    "is_koenig_egervary",
    "ke_decompose",
    "oracle_alpha_plus",
    "oracle_p3_plus",
    "oracle_plus_plus",
    "enumerate_graphs",
    "random_graphs",
    "SUITES",
    "VerificationOutcome",
    "run_suite",
    "GraphRecord",
    "ReportDocument",
]
