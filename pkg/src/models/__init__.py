"""Internal data models."""

from .graph import (
    GraphFamily,
    Normalization,
    AddressKind,
    VertexAddress,
    MetricGraph,
    Subdiamond,
    parse_address,
)
from .cycles import Cycle, CycleFamily, QuotientGraph
from .embedding import (
    EmbeddingMap,
    DistortionReport,
    SolverStatus,
    SearchCertificate,
    SolverResult,
)
from .reports import (
    DistanceVector,
    OracleDistance,
    DoublingReport,
    GeometryProfile,
    SubsetLowerBound,
    GrowthRow,
)

__all__ = [
    "GraphFamily",
    "Normalization",
    "AddressKind",
    "VertexAddress",
    "MetricGraph",
    "Subdiamond",
    "parse_address",
    "Cycle",
    "CycleFamily",
    "QuotientGraph",
    "EmbeddingMap",
    "DistortionReport",
    "SolverStatus",
    "SearchCertificate",
    "SolverResult",
    "DistanceVector",
    "OracleDistance",
    "DoublingReport",
    "GeometryProfile",
    "SubsetLowerBound",
    "GrowthRow",
]
