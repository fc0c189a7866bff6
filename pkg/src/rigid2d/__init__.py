"""Generic rigidity and global rigidity of graphs in the plane.

A graph is rigid when generic straight-line placements admit no
continuous deformation preserving edge lengths, and globally rigid when
the edge lengths pin the placement down completely (up to isometry).
Both properties are decided combinatorially here: rigidity via the
(2,3)-sparsity pebble game and global rigidity as "complete, or
3-connected and redundantly rigid", with fast degree-based classifiers
for vertex-transitive, edge-transitive and distance-regular graphs and
an exhaustive small-graph census that cross-validates the two routes.
"""

from .classify import (
    ClassificationReport,
    CountLemmaReport,
    NonGlobalStatus,
    classify_distance_regular,
    classify_edge_transitive,
    classify_vertex_transitive,
    count_lemma_check,
    decide_global_rigidity,
    rigid_not_globally_rigid_status,
)
from .census import (
    CensusRecord,
    ParitySummary,
    census_record,
    enumerate_connected,
    ingest_graph6_stream,
    parity_records,
    run_parity,
)
from .connectivity import (
    Separation,
    cyclic_edge_connectivity_at_least,
    essential_separation_violation,
    is_essentially_6_connected,
    min_vertex_cut,
    vertex_connectivity,
)
from .errors import CorpusError, EdgeListError, Graph6Error, PreconditionError
from .generators import catalog_names, generate
from .graph import (
    EdgeId,
    Graph,
    clique_number,
    diameter,
    distance_matrix,
    format_edge_list,
    parse_edge_list,
)
from .graph6 import from_graph6, to_graph6
from .oracle import (
    PRIME,
    RealizationModP,
    oracle_is_rigid,
    random_realization,
    rigidity_matrix_rank,
)
from .rigidity import (
    PebbleState,
    RigidDecomposition,
    edge_in_circuit,
    find_circuit,
    is_redundantly_rigid,
    is_rigid,
    max_sparse_subgraph,
    rank,
    rigid_components,
)
from .symmetry import (
    IntersectionArray,
    SymmetryReport,
    automorphism_group,
    canonical_form,
    canonical_key,
    degree_bipartition,
    is_distance_regular,
    is_edge_transitive,
    is_isomorphic,
    is_vertex_transitive,
    symmetry_report,
)

__version__ = "0.1.0"

__all__ = [
    "ClassificationReport",
    "CountLemmaReport",
    "NonGlobalStatus",
    "CensusRecord",
    "ParitySummary",
    "Separation",
    "EdgeId",
    "Graph",
    "Graph6Error",
    "EdgeListError",
    "CorpusError",
    "PreconditionError",
    "IntersectionArray",
    "SymmetryReport",
    "PebbleState",
    "RigidDecomposition",
    "RealizationModP",
    "PRIME",
    "automorphism_group",
    "canonical_form",
    "canonical_key",
    "catalog_names",
    "census_record",
    "classify_distance_regular",
    "classify_edge_transitive",
    "classify_vertex_transitive",
    "clique_number",
    "count_lemma_check",
    "cyclic_edge_connectivity_at_least",
    "decide_global_rigidity",
    "degree_bipartition",
    "diameter",
    "distance_matrix",
    "edge_in_circuit",
    "enumerate_connected",
    "essential_separation_violation",
    "find_circuit",
    "format_edge_list",
    "from_graph6",
    "generate",
    "ingest_graph6_stream",
    "is_distance_regular",
    "is_edge_transitive",
    "is_essentially_6_connected",
    "is_isomorphic",
    "is_redundantly_rigid",
    "is_rigid",
    "is_vertex_transitive",
    "max_sparse_subgraph",
    "min_vertex_cut",
    "oracle_is_rigid",
    "parity_records",
    "parse_edge_list",
    "random_realization",
    "rank",
    "rigid_components",
    "rigid_not_globally_rigid_status",
    "rigidity_matrix_rank",
    "run_parity",
    "symmetry_report",
    "to_graph6",
    "vertex_connectivity",
]
