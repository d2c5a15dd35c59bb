"""
Exact distortion of vertex maps.

For f: X -> Y the distortion is (max d_Y / d_X) * (max d_X / d_Y) over
distinct source pairs; the free scale cancels, so everything runs on hop
counts and the edge lengths only enter the reported expansion and
contraction.
"""

from fractions import Fraction
from typing import Sequence, Tuple

from ..models.embedding import DistortionReport, EmbeddingMap
from ..metric.shortest_paths import UNREACHED, bfs_hops, hop_matrix, is_connected
from ..utils.exact import ExactValue, INFINITE, exact_ratio
from ..utils.exceptions import DomainError

HopMatrix = Sequence[Sequence[int]]

# a ratio num / den, den == 0 meaning unbounded
Ratio = Tuple[int, int]


def _greater(a: Ratio, b: Ratio) -> bool:
    """a > b for nonnegative ratios, den 0 read as +infinity."""
    if b[1] == 0:
        return False
    if a[1] == 0:
        return True
    return a[0] * b[1] > b[0] * a[1]


def _to_exact(ratio: Ratio) -> ExactValue:
    return exact_ratio(*ratio)


class PairScan:
    """
    Largest expansion and contraction ratios over all source pairs, in hops.

    The first pair (in (u, v) order, u < v) reaching a strict maximum is
    kept as the witness.
    """

    def __init__(self, source_hops: HopMatrix, target_hops: HopMatrix, assignment: Sequence[int]):
        self.expansion: Ratio = (0, 1)
        self.contraction: Ratio = (0, 1)
        self.expansion_pair: Tuple[int, int] = (0, 0)
        self.contraction_pair: Tuple[int, int] = (0, 0)
        size = len(assignment)
        for u in range(size):
            row_x = source_hops[u]
            row_y = target_hops[assignment[u]]
            for v in range(u + 1, size):
                dx = row_x[v]
                dy = row_y[assignment[v]]
                expansion = (dy, dx) if dy != UNREACHED else (1, 0)
                contraction = (dx, dy) if dy != UNREACHED else (0, 1)
                if _greater(expansion, self.expansion):
                    self.expansion, self.expansion_pair = expansion, (u, v)
                if _greater(contraction, self.contraction):
                    self.contraction, self.contraction_pair = contraction, (u, v)

    @property
    def distortion(self) -> ExactValue:
        if self.expansion[1] == 0 or self.contraction[1] == 0:
            return INFINITE
        return Fraction(self.expansion[0] * self.contraction[0],
                        self.expansion[1] * self.contraction[1])


def distortion_of(source_hops: HopMatrix, target_hops: HopMatrix, assignment: Sequence[int]) -> ExactValue:
    """Distortion of an assignment given both hop matrices."""
    return PairScan(source_hops, target_hops, assignment).distortion


def evaluate(embedding: EmbeddingMap) -> DistortionReport:
    """
    Exact expansion, contraction and distortion of a map.

    Args:
        embedding: Total vertex map of a connected source with >= 2 vertices

    Returns:
        DistortionReport; INFINITE distortion when two distinct source
        vertices share an image

    Raises:
        DomainError: Source too small or disconnected
    """
    source, target = embedding.source, embedding.target
    if source.vertex_count < 2:
        raise DomainError(f"{source.name} needs at least 2 vertices for a distortion")
    if not is_connected(source):
        raise DomainError(f"{source.name} is disconnected")

    source_hops = hop_matrix(source).tolist()
    target_rows = {image: bfs_hops(target, image) for image in sorted(set(embedding.assignment))}
    scan = PairScan(source_hops, target_rows, embedding.assignment)

    unit = target.edge_length / source.edge_length
    expansion = _to_exact(scan.expansion)
    contraction = _to_exact(scan.contraction)
    return DistortionReport(
        expansion=expansion if expansion is INFINITE else expansion * unit,
        contraction=contraction if contraction is INFINITE else contraction / unit,
        distortion=scan.distortion,
        witness_expansion_pair=scan.expansion_pair,
        witness_contraction_pair=scan.contraction_pair,
    )

