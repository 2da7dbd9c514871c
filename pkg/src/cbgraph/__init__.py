"""Chordal bipartite graphs: recognition with certificates, enumeration of
all chordal bipartite induced subgraphs, and hypergraph beta-acyclicity."""

from .graph import (
    Bipartition,
    Comparability,
    Graph,
    NotBipartiteError,
    compare_neighborhoods,
    is_bipartite,
    neighbors_in,
    neighbors_within_2,
    neighbors_within_2_ambient,
)
from .ordering import Ranking, degeneracy_ranking, natural_ranking
from .weak_simplicial import (
    RankedVertexSet,
    compute_aws,
    compute_ws,
    delta_aws,
    delta_ws,
    is_bipartite_chain,
    is_weak_simplicial,
    is_weak_simplicial_via_chain,
    update_aws,
    update_ws,
)
from .enumeration import (
    EnumState,
    EnumStats,
    WasteReport,
    candidate_set,
    enumerate_solutions,
    parent_of,
    root_state,
    try_child,
    waste_bound_report,
)
from .recognition import (
    CbeoFound,
    Certificate,
    LongInducedCycle,
    OddCycle,
    StuckResidue,
    brute_enumerate,
    find_cbeo,
    is_chordal_bipartite,
    is_chordal_bipartite_bruteforce,
    verify_cbeo,
)
from .hypergraph import (
    Hypergraph,
    IncidenceGraph,
    beta_elimination_ordering,
    beta_leaf_weak_simplicial_bridge,
    incidence_graph,
    is_beta_acyclic,
    is_beta_leaf,
)
from .formats import (
    GraphFormatError,
    load_graph,
    load_hypergraph,
    parse_graph,
    parse_hypergraph,
    serialize_graph,
    serialize_hypergraph,
)

__version__ = "0.1.0"

__all__ = [
    "Bipartition",
    "CbeoFound",
    "Certificate",
    "Comparability",
    "EnumState",
    "EnumStats",
    "Graph",
    "GraphFormatError",
    "Hypergraph",
    "IncidenceGraph",
    "LongInducedCycle",
    "NotBipartiteError",
    "OddCycle",
    "RankedVertexSet",
    "Ranking",
    "StuckResidue",
    "WasteReport",
    "beta_elimination_ordering",
    "beta_leaf_weak_simplicial_bridge",
    "brute_enumerate",
    "candidate_set",
    "compare_neighborhoods",
    "compute_aws",
    "compute_ws",
    "degeneracy_ranking",
    "delta_aws",
    "delta_ws",
    "enumerate_solutions",
    "find_cbeo",
    "incidence_graph",
    "is_beta_acyclic",
    "is_beta_leaf",
    "is_bipartite",
    "is_bipartite_chain",
    "is_chordal_bipartite",
    "is_chordal_bipartite_bruteforce",
    "is_weak_simplicial",
    "is_weak_simplicial_via_chain",
    "load_graph",
    "load_hypergraph",
    "natural_ranking",
    "neighbors_in",
    "neighbors_within_2",
    "neighbors_within_2_ambient",
    "parent_of",
    "parse_graph",
    "parse_hypergraph",
    "root_state",
    "serialize_graph",
    "serialize_hypergraph",
    "try_child",
    "update_aws",
    "update_ws",
    "verify_cbeo",
    "waste_bound_report",
]
