"""Exact-computation toolkit for Berge-Turan problems on small hypergraphs.

Tests Berge-pattern containment with certificates, builds the red-blue
shadow decomposition bounding hypergraph size by g_r, runs greedy Zykov
symmetrization on 2-edge-colored graphs, constructs the extremal families,
evaluates the closed-form bounds in exact rational arithmetic, and
verifies bounds and sharp values by exhaustive isomorph-reduced search at
small n.
"""
from .berge import (
    BergeCertificate,
    BudgetExhaustedError,
    RedBlueDecomposition,
    check_certificate,
    contains_berge,
    decompose_red_blue,
    find_berge_tree,
    greedy_berge_tree_embed,
    tree_degree_violator,
)
from .bounds import (
    BoundDomainError,
    BoundSpec,
    BoundValue,
    evaluate,
    exact_generalized_turan,
    exact_graph_turan,
)
from .constructions import (
    PatternFamily,
    build_pattern,
    expansion,
    near_regular_construction,
    parse_pattern_name,
    partition_construction,
    turan_graph,
    turan_hypergraph,
)
from .core import (
    BLUE,
    RED,
    CanonicalForm,
    Graph,
    Hypergraph,
    RedBlueGraph,
    canonical_form,
    contains_subgraph,
    count_cliques,
    count_subgraphs,
    g_r,
)
from .matching import (
    AlternatingClassification,
    BipartiteIncidence,
    Matching,
    assign_private_sets,
    classify_alternating,
    hall_violator,
    maximum_matching,
)
from .search import (
    SearchConfig,
    SearchResult,
    ThresholdReport,
    construction_seed,
    max_berge_free,
    max_g_r,
    threshold_n0,
)
from .symmetrization import (
    SymmetrizationTrace,
    symmetrize_class,
    symmetrize_vertex,
    zykov_run,
)

__version__ = "0.1.0"
