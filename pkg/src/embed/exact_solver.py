"""
Exact minimum-distortion search by branch and bound.

Source vertices are placed in BFS order from a vertex of maximum
eccentricity. A partial map carries its largest expansion and contraction
ratios over the placed pairs; their product only grows as vertices are
added, so it is a lower bound for every completion and the subtree is
pruned once it reaches the incumbent. The root's image ranges over one
representative per target vertex orbit.
"""

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import networkx as nx

from config.settings import SolverConfig
from .distortion import HopMatrix
from .orbits import orbit_representatives
from ..models.embedding import (
    EmbeddingMap,
    SearchCertificate,
    SolverResult,
    SolverStatus,
)
from ..models.graph import MetricGraph
from ..metric.shortest_paths import UNREACHED, hop_matrix, is_connected
from ..utils.exact import ExactValue, INFINITE, format_exact
from ..utils.logger import setup_logger
from ..utils.exceptions import DomainError

logger = setup_logger(__name__)


class SearchBudgetExhausted(Exception):
    """Internal signal: the node budget ran out."""


class DistortionSearch:
    """
    Branch and bound over injective assignments, on hop matrices.

    Args:
        source_hops: Square source distance matrix (all pairs finite, > 0 off
            the diagonal)
        target_hops: Square target hop matrix (-1 for unreachable pairs)
        root_images: Allowed images of the first vertex in the order
        budget: Maximum number of search nodes
        incumbent: Preloaded (numerator, denominator) bound; den 0 = none
        stop_at_one: Stop as soon as a distortion 1 map is found
    """

    def __init__(
        self,
        source_hops: HopMatrix,
        target_hops: HopMatrix,
        root_images: Optional[Sequence[int]] = None,
        budget: int = 10**7,
        incumbent: Tuple[int, int] = (1, 0),
        stop_at_one: bool = True,
    ):
        self.dx = source_hops
        self.dy = target_hops
        self.size = len(source_hops)
        self.target_size = len(target_hops)
        self.order = bfs_order(source_hops)
        self.root_images = list(root_images) if root_images is not None else list(range(self.target_size))
        self.budget = budget
        self.stop_at_one = stop_at_one
        self.best = incumbent
        self.best_assignment: Optional[Tuple[int, ...]] = None
        self.nodes = 0
        self.improving_leaves = 0
        self.exhausted = False

        position = {vertex: i for i, vertex in enumerate(self.order)}
        # placed neighbours of order[i] (source edges are the distance-1 pairs)
        self.earlier_neighbors = [
            [w for w in range(self.size) if source_hops[u][w] == 1 and position[w] < i]
            for i, u in enumerate(self.order)
        ]

    def run(self) -> "DistortionSearch":
        self.assignment = [-1] * self.size
        self.used = [False] * self.target_size
        try:
            self._place(0, (0, 1), (0, 1))
            self.exhausted = True
        except SearchBudgetExhausted:
            self.exhausted = False
        return self

    @property
    def value(self) -> ExactValue:
        if self.best[1] == 0:
            return INFINITE
        return Fraction(*self.best)

    def _below_best(self, num: int, den: int) -> bool:
        """num / den < incumbent."""
        if self.best[1] == 0:
            return True
        return num * self.best[1] < self.best[0] * den

    def _place(self, index: int, expansion: Tuple[int, int], contraction: Tuple[int, int]) -> None:
        if index == self.size:
            self.improving_leaves += 1
            num = expansion[0] * contraction[0]
            den = expansion[1] * contraction[1]
            self.best = (num, den)
            self.best_assignment = tuple(self.assignment)
            return

        u = self.order[index]
        row_x = self.dx[u]
        placed = self.order[:index]
        for image in self._candidates(index):
            if self.used[image]:
                continue
            self.nodes += 1
            if self.nodes > self.budget:
                raise SearchBudgetExhausted()
            row_y = self.dy[image]
            e_num, e_den = expansion
            c_num, c_den = contraction
            feasible = True
            for w in placed:
                dy = row_y[self.assignment[w]]
                if dy == UNREACHED:
                    feasible = False
                    break
                dx = row_x[w]
                if dy * e_den > e_num * dx:
                    e_num, e_den = dy, dx
                if dx * c_den > c_num * dy:
                    c_num, c_den = dx, dy
            if not feasible:
                continue
            if index > 0 and not self._below_best(e_num * c_num, e_den * c_den):
                continue

            self.assignment[u] = image
            self.used[image] = True
            self._place(index + 1, (e_num, e_den), (c_num, c_den))
            self.used[image] = False
            self.assignment[u] = -1
            if self.stop_at_one and self.best[1] != 0 and self.best[0] == self.best[1]:
                return

    def _candidates(self, index: int) -> List[int]:
        if index == 0:
            return self.root_images
        neighbors = [self.assignment[w] for w in self.earlier_neighbors[index]]
        if not neighbors:
            return list(range(self.target_size))

        def plausibility(image: int) -> Tuple[int, int]:
            row = self.dy[image]
            total = 0
            for placed in neighbors:
                hop = row[placed]
                total += hop if hop != UNREACHED else self.target_size * 2
            return (total, image)

        return sorted(range(self.target_size), key=plausibility)


def bfs_order(source_hops: HopMatrix) -> List[int]:
    """BFS order from the vertex of maximum eccentricity (least id on ties)."""
    size = len(source_hops)
    if size == 0:
        return []
    root = max(range(size), key=lambda u: (max(source_hops[u]), -u))
    graph = nx.Graph()
    graph.add_nodes_from(range(size))
    graph.add_edges_from((u, w) for u in range(size) for w in range(u + 1, size) if source_hops[u][w] == 1)
    order = [root] + [w for _, w in nx.bfs_edges(graph, root, sort_neighbors=sorted)]
    seen = set(order)
    # subset metrics need not be connected through distance-1 pairs
    order += [w for w in range(size) if w not in seen]
    return order


def _check_budget(budget: int) -> None:
    if budget <= 0:
        raise DomainError(f"Node budget must be positive, got {budget}")


def min_distortion_exact(
    source: MetricGraph,
    target: MetricGraph,
    node_budget: Optional[int] = None,
    use_symmetry: bool = True,
) -> SolverResult:
    """
    Minimum distortion of an injective map source -> target.

    Args:
        source: Connected graph with at least 2 vertices
        target: Any graph
        node_budget: Search node limit (default: solver config)
        use_symmetry: Restrict the root image to orbit representatives

    Returns:
        SolverResult with status optimal (tree exhausted, or a distortion
        1 map found), upper_bound_only (budget hit) or
        infeasible_injective (more source than target vertices). When the
        tree is exhausted without any finite map (the source cannot land in
        one component of the target) the result is optimal with value
        INFINITE and no witness.

    Raises:
        DomainError: Non-positive budget, tiny or disconnected source
    """
    budget = node_budget if node_budget is not None else SolverConfig.from_env().node_budget
    _check_budget(budget)
    if source.vertex_count < 2:
        raise DomainError(f"{source.name} needs at least 2 vertices")
    if not is_connected(source):
        raise DomainError(f"{source.name} is disconnected")

    if source.vertex_count > target.vertex_count:
        return SolverResult(
            status=SolverStatus.INFEASIBLE_INJECTIVE,
            value=INFINITE,
            witness=None,
            nodes_explored=0,
            certificate=SearchCertificate(
                True, INFINITE,
                f"{source.vertex_count} source vertices cannot map injectively "
                f"into {target.vertex_count} target vertices"),
            method="exact",
        )

    source_hops = hop_matrix(source).tolist()
    target_hops = hop_matrix(target).tolist()
    roots = orbit_representatives(target) if use_symmetry else None
    search = DistortionSearch(source_hops, target_hops, roots, budget).run()
    return _result(search, source, target, budget)


def _result(search: DistortionSearch, source: MetricGraph, target: MetricGraph, budget: int) -> SolverResult:
    witness = None
    if search.best_assignment is not None:
        witness = EmbeddingMap(source, target, search.best_assignment)
    value = search.value
    reached_one = value == 1
    if search.exhausted or reached_one:
        status = SolverStatus.OPTIMAL
        reason = ("distortion 1 is a universal lower bound" if reached_one
                  else f"search tree exhausted at bound {format_exact(value)}")
        certificate = SearchCertificate(True, value, reason)
    else:
        status = SolverStatus.UPPER_BOUND_ONLY
        certificate = SearchCertificate(False, value, f"node budget {budget} exhausted")
    logger.info(f"Exact search {source.name} -> {target.name}: {status.value} "
                f"value={format_exact(value)} nodes={search.nodes}")
    return SolverResult(
        status=status,
        value=value,
        witness=witness,
        nodes_explored=search.nodes,
        certificate=certificate,
        method="exact",
        details={"order": " ".join(map(str, search.order))},
    )


def min_distortion_on_matrix(
    source_hops: HopMatrix,
    target_hops: HopMatrix,
    root_images: Optional[Sequence[int]] = None,
    budget: int = 10**7,
) -> DistortionSearch:
    """Exhaustive search on a finite metric given by a hop matrix."""
    _check_budget(budget)
    return DistortionSearch(source_hops, target_hops, root_images, budget).run()


def verify_certificate(result: SolverResult, node_budget: Optional[int] = None) -> SearchCertificate:
    """
    Re-run the search with the reported value preloaded as incumbent.

    An optimal result must produce zero improving leaves: no complete map
    beats the value.

    Raises:
        DomainError: The result carries no witness to take the graphs from
    """
    if result.status == SolverStatus.INFEASIBLE_INJECTIVE:
        return result.certificate
    if result.witness is None:
        raise DomainError("Result has no witness map to verify")
    source, target = result.witness.source, result.witness.target
    budget = node_budget if node_budget is not None else SolverConfig.from_env().node_budget
    _check_budget(budget)
    value = result.value
    incumbent = (1, 0) if value is INFINITE else (value.numerator, value.denominator)
    search = DistortionSearch(
        hop_matrix(source).tolist(),
        hop_matrix(target).tolist(),
        orbit_representatives(target),
        budget,
        incumbent=incumbent,
        stop_at_one=False,
    ).run()
    return SearchCertificate(
        exhausted=search.exhausted,
        bound=value,
        reason=f"re-search below {format_exact(value)} visited {search.nodes} nodes",
        improving_leaves=search.improving_leaves,
    )
