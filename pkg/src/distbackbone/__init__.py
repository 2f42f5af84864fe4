"""Shortest-path distance closures and distance backbones of weighted graphs.

Build a weighted graph with proximity or distance semantics, compute its
all-pairs closure under a pluggable path-length measure (additive "metric"
and bottleneck "ultrametric" built in), and extract the backbone: the
subgraph of edges that obey the generalized triangle inequality and suffice
to reproduce every shortest path.
"""

from .algebra import (
    METRIC,
    ULTRAMETRIC,
    LawViolation,
    PathAlgebra,
    ProximityAlgebra,
    check_algebra_laws,
    conjugate_proximity_algebra,
    distance_weight,
    g_extend,
    get_algebra,
    proximity_weight,
    register_algebra,
    registered_algebras,
)
from .backbone import (
    Backbone,
    EdgeClass,
    SufficiencyCheck,
    extract_backbone,
    semi_triangular_witness,
    verify_backbone_sufficiency,
)
from .closure import (
    ClosureResult,
    closure_apsp,
    closure_distance_product,
    closure_sssp,
    transitive_closure_proximity,
)
from .errors import (
    AlgebraLawError,
    ClosureMismatchError,
    DistBackboneError,
    DuplicateEdgeError,
    NegativeWeightError,
    NotSemiTriangularError,
    ProximityRangeError,
    SelfLoopWarning,
    SemanticsError,
    TooFewNodesError,
    UnknownAlgebraError,
)
from .graph import (
    Semantics,
    WeightedDigraph,
    build_graph,
    symmetrize,
    to_distance,
    to_proximity,
)
from . import generators, io
from .stats import (
    BackboneReport,
    MeasureReport,
    backbone_report,
    density,
    graph_stats,
    tau,
)

__version__ = "0.1.0"

__all__ = [
    "METRIC",
    "ULTRAMETRIC",
    "generators",
    "io",
    "AlgebraLawError",
    "Backbone",
    "BackboneReport",
    "ClosureMismatchError",
    "ClosureResult",
    "DistBackboneError",
    "DuplicateEdgeError",
    "EdgeClass",
    "LawViolation",
    "MeasureReport",
    "NegativeWeightError",
    "NotSemiTriangularError",
    "PathAlgebra",
    "ProximityAlgebra",
    "ProximityRangeError",
    "SelfLoopWarning",
    "Semantics",
    "SemanticsError",
    "SufficiencyCheck",
    "TooFewNodesError",
    "UnknownAlgebraError",
    "WeightedDigraph",
    "backbone_report",
    "build_graph",
    "check_algebra_laws",
    "closure_apsp",
    "closure_distance_product",
    "closure_sssp",
    "conjugate_proximity_algebra",
    "density",
    "distance_weight",
    "extract_backbone",
    "g_extend",
    "get_algebra",
    "graph_stats",
    "proximity_weight",
    "register_algebra",
    "registered_algebras",
    "semi_triangular_witness",
    "symmetrize",
    "tau",
    "to_distance",
    "to_proximity",
    "transitive_closure_proximity",
    "verify_backbone_sufficiency",
]
