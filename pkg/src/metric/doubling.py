"""
Ball-form doubling and bounded-geometry analysis.

For a ball B of diameter delta, a cover of B uses sets of diameter at
most delta / 2. Lower bounds come from packings (points pairwise farther
than delta / 2 apart need distinct sets) and from clique counting in the
"within delta / 2" graph; upper bounds come from a greedy cover. Bounded
sets are only analysed through the balls containing them.
"""

from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from config.settings import AnalysisConfig
from .shortest_paths import bfs_hops, hop_matrix, pairwise_hops, radius_to_hops, UNREACHED
from ..models.graph import MetricGraph
from ..models.reports import DoublingReport, GeometryProfile
from ..utils.exact import format_exact
from ..utils.logger import setup_logger
from ..utils.exceptions import DomainError

logger = setup_logger(__name__)

WITNESS_BOTTOM_BALL = "witness_bottom_ball"
SCAN_ALL_BALLS = "scan_all_balls"
STRATEGIES = (WITNESS_BOTTOM_BALL, SCAN_ALL_BALLS)


class BallCover:
    """
    Cover bounds for one ball, computed on its hop matrix.

    ``hops`` is the square hop matrix of the ball's members (sorted ids).
    """

    def __init__(self, members: Sequence[int], hops: np.ndarray):
        self.members = list(members)
        self.hops = hops
        self.diameter = int(hops.max()) if len(self.members) else 0
        # i and j may share a cover set iff 2 * d(i, j) <= delta
        self.close = 2 * hops <= self.diameter

    @property
    def size(self) -> int:
        return len(self.members)

    def packing(self) -> List[int]:
        """
        Points pairwise farther than delta / 2 apart.

        Greedy independent set of the "within delta / 2" graph, picking by
        increasing conflict degree, ties by lowest id.
        """
        degrees = self.close.sum(axis=1) - 1
        order = sorted(range(self.size), key=lambda i: (int(degrees[i]), self.members[i]))
        chosen: List[int] = []
        for i in order:
            if not any(self.close[i, j] for j in chosen):
                chosen.append(i)
        return sorted(self.members[i] for i in chosen)

    def clique_bound(self) -> Tuple[int, int]:
        """
        Pair-capacity bound ceil(|B| / omega), with omega the largest
        set of pairwise close points.

        Returns:
            Tuple of (bound, omega)
        """
        graph = nx.Graph()
        graph.add_nodes_from(range(self.size))
        rows, cols = np.nonzero(np.triu(self.close, k=1))
        graph.add_edges_from(zip(rows.tolist(), cols.tolist()))
        clique, _ = nx.max_weight_clique(graph, weight=None)
        omega = max(len(clique), 1)
        return -(-self.size // omega), omega

    def candidates(self) -> np.ndarray:
        """
        One candidate set per center x in B: B intersected with the largest
        realized ball around x whose diameter stays within delta / 2.

        Returns:
            Boolean matrix, row i is the candidate centered at member i
        """
        rows = np.zeros((self.size, self.size), dtype=bool)
        for i in range(self.size):
            best = self.hops[i] == 0
            for radius in np.unique(self.hops[i]):
                mask = self.hops[i] <= radius
                sub = self.hops[np.ix_(mask, mask)]
                if 2 * int(sub.max()) > self.diameter:
                    break
                best = mask
            rows[i] = best
        return rows

    def greedy_cover(self) -> int:
        """Greedy cover size: most uncovered points wins, ties lowest center id."""
        if self.size == 0:
            return 0
        candidates = self.candidates()
        uncovered = np.ones(self.size, dtype=bool)
        count = 0
        while uncovered.any():
            gains = (candidates & uncovered).sum(axis=1)
            best = int(np.argmax(gains))
            uncovered &= ~candidates[best]
            count += 1
        return count


def doubling_bounds(
    graph: MetricGraph,
    strategy: str = WITNESS_BOTTOM_BALL,
    limit: Optional[int] = None,
    config: Optional[AnalysisConfig] = None,
    workers: int = 1,
) -> DoublingReport:
    """
    Lower and upper bounds on the ball-form doubling constant.

    Args:
        graph: Graph to analyse
        strategy: ``witness_bottom_ball`` analyses the radius-one-edge ball
            around the bottom vertex; ``scan_all_balls`` scans every center
            with every realized radius up to half the diameter
        limit: Maximum (center, radius) pairs for the scan
        config: Analysis limits (scan limit, clique size limit)
        workers: Threads for the all-pairs hop matrix of the scan

    Returns:
        DoublingReport; ``complete`` is False when the scan limit cut the
        scan short

    Raises:
        DomainError: Unknown strategy or empty graph
    """
    config = config or AnalysisConfig.from_env()
    if graph.vertex_count == 0:
        raise DomainError("The empty graph has no balls")
    if strategy == WITNESS_BOTTOM_BALL:
        return _witness_bottom_ball(graph, config)
    if strategy == SCAN_ALL_BALLS:
        return _scan_all_balls(graph, limit or config.scan_limit, workers)
    raise DomainError(f"Unknown doubling strategy {strategy!r}, expected one of {', '.join(STRATEGIES)}")


def _witness_bottom_ball(graph: MetricGraph, config: AnalysisConfig) -> DoublingReport:
    center = graph.bottom
    radius_hops = 1 if graph.vertex_count > 1 else 0
    hops = bfs_hops(graph, center, max_hops=radius_hops)
    members = [x for x, h in enumerate(hops) if h != UNREACHED]
    cover = BallCover(members, pairwise_hops(graph, members))

    packing = cover.packing()
    lower = len(packing)
    certificate = (
        f"{lower} points pairwise farther than {format_exact(graph.length(cover.diameter) / 2)} apart"
    )
    if cover.size <= config.clique_limit:
        clique_lower, omega = cover.clique_bound()
        certificate += f"; {cover.size} points with at most {omega} per set need {clique_lower} sets"
        if clique_lower > lower:
            lower = clique_lower
            packing = []

    report = DoublingReport(
        graph=graph.name,
        ball_center=center,
        ball_radius=graph.length(radius_hops),
        witness_lower_bound=lower,
        greedy_upper_bound=cover.greedy_cover(),
        scanned_balls=1,
        certificate=certificate,
        witness_points=packing,
        upper_center=center,
        upper_radius=graph.length(radius_hops),
    )
    logger.info(f"Doubling witness on {graph.name}: lower={report.witness_lower_bound} "
                f"upper={report.greedy_upper_bound}")
    return report


def _scan_all_balls(graph: MetricGraph, limit: int, workers: int) -> DoublingReport:
    matrix = hop_matrix(graph, workers)
    reachable = np.where(matrix >= 0, matrix, np.iinfo(np.int64).max)
    diameter = int(matrix.max())

    seen = set()
    pairs = 0
    complete = True
    best_lower: Tuple[int, int, int, List[int]] = (0, 0, 0, [])
    best_upper: Tuple[int, int, int] = (0, 0, 0)

    for center in range(graph.vertex_count):
        radii = [int(r) for r in np.unique(matrix[center]) if 0 <= r and 2 * r <= diameter]
        for radius in radii:
            if pairs >= limit:
                complete = False
                break
            pairs += 1
            mask = reachable[center] <= radius
            key = np.packbits(mask).tobytes()
            if key in seen:
                continue
            seen.add(key)
            members = np.nonzero(mask)[0]
            cover = BallCover(members.tolist(), matrix[np.ix_(members, members)])
            packing = cover.packing()
            if len(packing) > best_lower[0]:
                best_lower = (len(packing), center, radius, packing)
            upper = cover.greedy_cover()
            if upper > best_upper[0]:
                best_upper = (upper, center, radius)
        if not complete:
            break

    if not complete:
        logger.warning(f"Ball scan of {graph.name} stopped after {limit} (center, radius) pairs")

    lower, center, radius, packing = best_lower
    return DoublingReport(
        graph=graph.name,
        ball_center=center,
        ball_radius=graph.length(radius),
        witness_lower_bound=lower,
        greedy_upper_bound=best_upper[0],
        scanned_balls=len(seen),
        complete=complete,
        certificate=f"{lower} points pairwise farther than half the diameter of ball "
                    f"({center}, {format_exact(graph.length(radius))})",
        witness_points=packing,
        upper_center=best_upper[1],
        upper_radius=graph.length(best_upper[2]),
    )


def geometry_profile(graph: MetricGraph, radii: Iterable, workers: int = 1) -> GeometryProfile:
    """
    Largest ball cardinality M(r) for every requested radius.

    Args:
        graph: Graph to analyse
        radii: Nonempty collection of nonnegative exact radii

    Returns:
        GeometryProfile with entries sorted by radius and the max degree

    Raises:
        DomainError: Empty or negative radii
    """
    radii = sorted({Fraction(r) for r in radii})
    if not radii:
        raise DomainError("geometry_profile needs at least one radius")
    if radii[0] < 0:
        raise DomainError(f"Radius must be nonnegative, got {radii[0]}")

    matrix = hop_matrix(graph, workers)
    entries = []
    for radius in radii:
        limit = radius_to_hops(graph, radius)
        inside = (matrix >= 0) & (matrix <= limit)
        entries.append((radius, int(inside.sum(axis=1).max())))
    return GeometryProfile(graph=graph.name, entries=entries, max_degree=graph.max_degree())
