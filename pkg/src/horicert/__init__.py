"""horicert: certificates for admissible graph contractions and the exact
surface arithmetic behind hyperbolic double-cover constructions."""

from .multigraph import (
    BoundExceededError,
    GraphError,
    Partition,
    UnknownVertexError,
    WeightedMultigraph,
    builtin,
    canonical_form,
    complete_multipartite,
    find_forbidden_triple,
    is_spanning_submultigraph,
    multipartite_partition,
)
from .contraction import (
    ContractionCertificate,
    ContractionStep,
    NotAdjacentError,
    NotSpanningError,
    PreconditionError,
    absorb_submultigraph,
    brute_force_oracle,
    contract,
    contract_multipartite,
    decide_contractible,
    feasible_l_range,
    lift_certificate,
    published_certificate,
    verify_certificate,
)
from .surfaces import (
    SPLIT,
    ChernData,
    DivClass,
    P2,
    Surface,
    SurfaceMismatchError,
    adjunction_genus,
    canonical_class,
    double_cover_chern,
    hirzebruch,
    intersect,
    rh_pullback_genus,
)
from .arrangements import (
    Arrangement,
    Role,
    check_arrangement_smoothing,
    contracted_singularities,
    dual_graph,
    fibers_and_sections,
    general_lines,
    pairwise_nodes,
    total_class,
)
from .report import Obligation, ObligationReport, Verdict
from .pipeline import (
    Scenario,
    check_cyclic_cover_setup,
    check_degeneration_bounds,
    cyclic_cover_factorization,
    decide_plane_double_cover,
    decide_ruled_double_cover,
)

__version__ = "0.1.0"

__all__ = [
    "Arrangement",
    "BoundExceededError",
    "ChernData",
    "ContractionCertificate",
    "ContractionStep",
    "DivClass",
    "GraphError",
    "NotAdjacentError",
    "NotSpanningError",
    "Obligation",
    "ObligationReport",
    "P2",
    "Partition",
    "PreconditionError",
    "Role",
    "SPLIT",
    "Scenario",
    "Surface",
    "SurfaceMismatchError",
    "UnknownVertexError",
    "Verdict",
    "WeightedMultigraph",
    "absorb_submultigraph",
    "adjunction_genus",
    "brute_force_oracle",
    "builtin",
    "canonical_class",
    "canonical_form",
    "check_arrangement_smoothing",
    "check_cyclic_cover_setup",
    "check_degeneration_bounds",
    "complete_multipartite",
    "contract",
    "contract_multipartite",
    "contracted_singularities",
    "cyclic_cover_factorization",
    "decide_contractible",
    "decide_plane_double_cover",
    "decide_ruled_double_cover",
    "double_cover_chern",
    "dual_graph",
    "feasible_l_range",
    "fibers_and_sections",
    "find_forbidden_triple",
    "general_lines",
    "hirzebruch",
    "intersect",
    "is_spanning_submultigraph",
    "lift_certificate",
    "multipartite_partition",
    "pairwise_nodes",
    "published_certificate",
    "rh_pullback_genus",
    "total_class",
    "verify_certificate",
]
