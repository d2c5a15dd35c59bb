"""
Embedding models: vertex maps, distortion reports and solver results.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, Mapping, Optional, Tuple

from .graph import MetricGraph
from ..utils.exact import ExactValue
from ..utils.exceptions import ContractError


@dataclass(frozen=True, eq=False)
class EmbeddingMap:
    """
    Assignment of a target vertex to every source vertex.

    ``scale_hint`` is an optional r of r d_X(u, v) <= d_Y(f(u), f(v)) <= r C d_X(u, v);
    it is informational only, distortion never depends on it.
    """

    source: MetricGraph
    target: MetricGraph
    assignment: Tuple[int, ...]
    scale_hint: Optional[Fraction] = None

    def __post_init__(self):
        if len(self.assignment) != self.source.vertex_count:
            raise ContractError(
                f"Assignment covers {len(self.assignment)} of "
                f"{self.source.vertex_count} source vertices",
                details={"source": self.source.name, "target": self.target.name}
            )
        for vertex, image in enumerate(self.assignment):
            if not isinstance(image, int) or not 0 <= image < self.target.vertex_count:
                raise ContractError(
                    f"Vertex {vertex} maps to {image}, outside {self.target.name}",
                    details={"vertex": vertex, "image": image}
                )

    @classmethod
    def from_mapping(cls, source: MetricGraph, target: MetricGraph,
                     mapping: Mapping[int, int],
                     scale_hint: Optional[Fraction] = None) -> "EmbeddingMap":
        """Build from a dict, rejecting partial assignments."""
        missing = [v for v in range(source.vertex_count) if v not in mapping]
        if missing:
            raise ContractError(
                f"Assignment is partial: {len(missing)} source vertices unmapped",
                details={"missing": missing[:10]}
            )
        return cls(source, target, tuple(mapping[v] for v in range(source.vertex_count)), scale_hint)

    def __getitem__(self, vertex: int) -> int:
        return self.assignment[vertex]

    def is_injective(self) -> bool:
        return len(set(self.assignment)) == len(self.assignment)

    def compose(self, after: "EmbeddingMap") -> "EmbeddingMap":
        """The map ``after`` o ``self``."""
        if after.source is not self.target and after.source.name != self.target.name:
            raise ContractError(
                f"Cannot compose: {self.target.name} is not {after.source.name}"
            )
        hint = None
        if self.scale_hint is not None and after.scale_hint is not None:
            hint = self.scale_hint * after.scale_hint
        return EmbeddingMap(
            self.source, after.target,
            tuple(after.assignment[image] for image in self.assignment), hint
        )

    def to_dict(self) -> dict:
        return {
            "source": self.source.name,
            "target": self.target.name,
            "assignment": list(self.assignment),
            "scale_hint": None if self.scale_hint is None else str(self.scale_hint),
        }


@dataclass(frozen=True)
class DistortionReport:
    """Exact expansion, contraction and distortion of a map, with witnesses."""

    expansion: ExactValue
    contraction: ExactValue
    distortion: ExactValue
    witness_expansion_pair: Tuple[int, int]
    witness_contraction_pair: Tuple[int, int]

    @property
    def is_scaled_isometry(self) -> bool:
        return self.distortion == 1


class SolverStatus(str, Enum):
    """Outcome of a minimum-distortion search."""
    OPTIMAL = "optimal"
    UPPER_BOUND_ONLY = "upper_bound_only"
    INFEASIBLE_INJECTIVE = "infeasible_injective"


@dataclass(frozen=True)
class SearchCertificate:
    """Record that the search tree was exhausted at the reported bound."""

    exhausted: bool
    bound: ExactValue
    reason: str
    improving_leaves: int = 0


@dataclass(frozen=True)
class SolverResult:
    """Result of an exact or heuristic minimum-distortion run."""

    status: SolverStatus
    value: ExactValue
    witness: Optional[EmbeddingMap]
    nodes_explored: int
    certificate: Optional[SearchCertificate] = None
    method: str = ""
    details: Dict[str, str] = field(default_factory=dict)
