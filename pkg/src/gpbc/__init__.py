"""Exact geodesics and betweenness centrality on generalized Petersen graphs.

The package pairs an O(1) closed-form layer for GP(n,2) with brute-force
oracles (BFS geodesic counting, exact-rational Brandes accumulation) and
a validation harness that documents every point where the two disagree.
"""

from ._kernels import active_backend, set_backend, use_backend
from .centrality import (
    CentralityMap,
    Rational,
    betweenness,
    induced_between_sets,
    induced_by_set,
    induced_by_vertex,
    induced_sum,
    naive_betweenness,
    subgraph_betweenness,
)
from .errors import (
    BadVertexLabel,
    DomainError,
    EndpointError,
    GpbcError,
    InvalidParameters,
    LimitExceeded,
    MembershipError,
    OverlapError,
    SameVertexError,
)
from .formulas import (
    ClosedFormValue,
    Family,
    PairClass,
    PairKind,
    cf_betweenness_inner,
    cf_betweenness_outer,
    cf_classic_induced,
    cf_diameter,
    cf_distance,
    cf_lemma,
    cf_sigma,
    classify_pair,
)
from .graphs import (
    CycleDecomposition,
    GpGraph,
    Graph,
    Ring,
    VertexId,
    build_gp,
    complete_graph,
    cycle_graph,
    export_graph,
    inner_cycle_decomposition,
    is_vertex_transitive,
    parse_vertex_label,
    path_graph,
    star_graph,
    wheel_graph,
)
from .shortest_paths import (
    ShortestPathData,
    bfs_dag,
    diameter,
    distance,
    enumerate_geodesics,
    sigma,
    sigma_through,
)
from .validation import (
    Discrepancy,
    DiscrepancyReport,
    Quantity,
    run_identity_suite,
    run_suite,
    validate_betweenness,
    validate_classic_induced,
    validate_distance_diameter,
    validate_sigma,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
