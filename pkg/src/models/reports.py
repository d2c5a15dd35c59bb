"""
Report models for metric analysis.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from ..utils.exact import ExactValue


@dataclass(frozen=True)
class DistanceVector:
    """Single-source hop counts with the exact edge length."""

    source: int
    hops: Tuple[int, ...]
    edge_length: Fraction = Fraction(1)

    @property
    def distances(self) -> List[Fraction]:
        return [h * self.edge_length for h in self.hops]

    def distance(self, vertex: int) -> Fraction:
        return self.hops[vertex] * self.edge_length


@dataclass(frozen=True)
class OracleDistance:
    """Answer of the distance oracle."""

    hops: int
    length: Fraction
    method: str = "hierarchical"
    note: str = ""


@dataclass
class DoublingReport:
    """
    Ball-form doubling bounds.

    ``witness_lower_bound`` is certified on the ball (ball_center,
    ball_radius); ``greedy_upper_bound`` is the largest greedy cover size
    over the scanned balls. Bounded sets are only analysed through balls.
    """

    graph: str
    ball_center: int
    ball_radius: Fraction
    witness_lower_bound: int
    greedy_upper_bound: int
    scanned_balls: int
    complete: bool = True
    certificate: str = ""
    witness_points: List[int] = field(default_factory=list)
    upper_center: Optional[int] = None
    upper_radius: Optional[Fraction] = None


@dataclass
class GeometryProfile:
    """Largest ball cardinality per radius."""

    graph: str
    entries: List[Tuple[Fraction, int]] = field(default_factory=list)
    max_degree: int = 0

    def cardinality(self, radius: Fraction) -> int:
        for r, count in self.entries:
            if r == radius:
                return count
        raise KeyError(radius)


@dataclass(frozen=True)
class SubsetLowerBound:
    """Best exact subset distortion found by sampling."""

    value: ExactValue
    witness_subset: Tuple[int, ...]
    subsets_checked: int
    subset_size: int


@dataclass(frozen=True)
class GrowthRow:
    """One row of the growth experiment table."""

    n: int
    target_level: int
    upper_bound: ExactValue
    lower_bound: ExactValue
    upper_method: str
