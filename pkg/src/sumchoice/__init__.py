"""Exact sum list coloring for small graphs.

Decide f-choosability with witness extraction, compute sum choice numbers
via the min(rho, tau) recursion with block decomposition and memoization,
classify sc-greedy graphs, and reproduce the known small-graph tables.
"""

from .errors import (
    CapacityError, FamilySpecError, GraphFormatError, SearchBudgetExceeded,
    SumChoiceError,
)
from .graphs import (
    CanonicalKey, Graph, blocks, canonical_form, canonical_form_and_permutation,
    cartesian_product, encode_graph6, enumerate_connected_graphs, empty_graph,
    graph_from_edges, graph_power, induced_subgraph, parse_graph6,
)
from .families import (
    BrokenWheel, CartesianProduct, Complete, CompleteBipartite, Cycle,
    FamilySpec, GeneralizedTheta, Path, PathOfCycles, Power, Theta,
    TreeOfCycles, Wheel, format_family, generate, parse_family,
)
from .choosability import (
    Budget, Choosable, ChoosabilityVerdict, Coloring, ListAssignment,
    NotChoosable, SizeFunction, UnknownVerdict, canonical_assignments,
    find_forcing_assignment, is_choosable, is_list_colorable,
    reduce_size_function,
)
from .sumnumber import (
    INFINITY, ChiUnknown, MemoStore, MinimalNonGreedy, SumChoiceRecord,
    chi_sc, classify_minimally_not_sc_greedy, closed_form, confirm_minimality,
    direct_min_choice_size, greedy_bound, greedy_choice_function,
    is_sc_greedy, rho, tau,
)
from .suites import RunReport, run_suite

__version__ = "0.1.0"

__all__ = [
    "Budget", "BrokenWheel", "CanonicalKey", "CapacityError",
    "CartesianProduct", "ChiUnknown", "Choosable", "ChoosabilityVerdict",
    "Coloring", "Complete", "CompleteBipartite", "Cycle", "FamilySpec",
    "FamilySpecError", "GeneralizedTheta", "Graph", "GraphFormatError",
    "INFINITY", "ListAssignment", "MemoStore", "MinimalNonGreedy",
    "NotChoosable", "Path", "PathOfCycles", "Power", "RunReport",
    "SearchBudgetExceeded", "SizeFunction", "SumChoiceError",
    "SumChoiceRecord", "Theta", "TreeOfCycles", "UnknownVerdict", "Wheel",
    "blocks", "canonical_assignments", "canonical_form",
    "canonical_form_and_permutation", "cartesian_product", "chi_sc",
    "classify_minimally_not_sc_greedy", "closed_form", "confirm_minimality",
    "direct_min_choice_size", "empty_graph", "encode_graph6",
    "enumerate_connected_graphs", "find_forcing_assignment", "format_family",
    "generate", "graph_from_edges", "graph_power", "greedy_bound",
    "greedy_choice_function", "induced_subgraph", "is_choosable",
    "is_list_colorable", "is_sc_greedy", "parse_family", "parse_graph6",
    "reduce_size_function", "rho", "run_suite", "tau",
]
