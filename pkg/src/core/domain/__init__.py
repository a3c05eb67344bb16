"""Domain models for kitecolor.

Models are organized by area:

- graph: EmbeddedGraph, Face, Kite, EulerReport, GraphStats
- configuration: LightEdge, LightFourFace, TripleTriangleCenter, TwoAltCycle
- charges: RuleSetId, ChargeState, AuditReport
- coloring: ListAssignment, Coloring, PeelTrace, verification results
- generation: GenSpec, OracleBudget

All models are re-exported here for convenient importing:

    from src.core.domain import EmbeddedGraph, ListAssignment, Coloring
"""

from .charges import AuditReport, ChargeState, PreconditionCheck, RuleSetId
from .coloring import (
    Coloring,
    ColoringMode,
    Guarantee,
    ListAssignment,
    PeelStep,
    PeelTrace,
    VerificationResult,
    Violation,
    ViolationKind,
)
from .configuration import (
    Configuration,
    FinderMode,
    LightEdge,
    LightFourFace,
    StructureTheorem,
    TripleTriangleCenter,
    TwoAltCycle,
)
from .generation import GenSpec, OracleBudget
from .graph import (
    Dart,
    EdgeId,
    EmbeddedGraph,
    EulerReport,
    Face,
    GraphStats,
    Kite,
    SurfaceTag,
    VertexId,
    edge_id,
    format_edge,
)

__all__ = [
    # Graph models
    "Dart",
    "EdgeId",
    "VertexId",
    "EmbeddedGraph",
    "EulerReport",
    "Face",
    "GraphStats",
    "Kite",
    "SurfaceTag",
    "edge_id",
    "format_edge",
    # Configurations
    "Configuration",
    "FinderMode",
    "StructureTheorem",
    "LightEdge",
    "LightFourFace",
    "TripleTriangleCenter",
    "TwoAltCycle",
    # Charges
    "RuleSetId",
    "ChargeState",
    "PreconditionCheck",
    "AuditReport",
    # Coloring
    "ColoringMode",
    "Guarantee",
    "ListAssignment",
    "Coloring",
    "PeelStep",
    "PeelTrace",
    "Violation",
    "ViolationKind",
    "VerificationResult",
    # Generation
    "GenSpec",
    "OracleBudget",
]
