"""
Local search for low-distortion maps.

Each restart starts from a seeded random assignment (injective when the
target is large enough) and repeatedly moves one source vertex to a
random target vertex, swapping images when that vertex is taken. Only
strict improvements are accepted.
"""

import random
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Tuple

from config.settings import SolverConfig
from .distortion import HopMatrix, distortion_of
from ..models.embedding import EmbeddingMap, SolverResult, SolverStatus
from ..models.graph import MetricGraph
from ..metric.shortest_paths import hop_matrix, is_connected
from ..utils.exact import ExactValue, format_exact
from ..utils.logger import setup_logger
from ..utils.exceptions import DomainError

logger = setup_logger(__name__)

Candidate = Tuple[ExactValue, Tuple[int, ...]]


def restart_seed(seed: int, restart: int) -> int:
    """Seed of one restart, independent of scheduling."""
    return seed * 1_000_003 + restart


def local_search(
    source_hops: HopMatrix,
    target_hops: HopMatrix,
    seed: int,
    iterations: int,
) -> Candidate:
    """One seeded restart; returns (value, assignment)."""
    rng = random.Random(seed)
    size, target_size = len(source_hops), len(target_hops)
    if size <= target_size:
        assignment = rng.sample(range(target_size), size)
    else:
        assignment = [rng.randrange(target_size) for _ in range(size)]
    owner = {}
    for vertex, image in enumerate(assignment):
        owner.setdefault(image, vertex)
    value = distortion_of(source_hops, target_hops, assignment)

    for _ in range(iterations):
        if value == 1:
            break
        vertex = rng.randrange(size)
        image = rng.randrange(target_size)
        old = assignment[vertex]
        if image == old:
            continue
        other = owner.get(image)
        trial = list(assignment)
        trial[vertex] = image
        if other is not None and trial[other] == image and other != vertex:
            trial[other] = old
        trial_value = distortion_of(source_hops, target_hops, trial)
        if trial_value < value:
            assignment, value = trial, trial_value
            owner = {}
            for v, img in enumerate(assignment):
                owner.setdefault(img, v)
    return value, tuple(assignment)


def min_distortion_heuristic(
    source: MetricGraph,
    target: MetricGraph,
    seed: int = 0,
    iterations: Optional[int] = None,
    restarts: Optional[int] = None,
    workers: Optional[int] = None,
) -> SolverResult:
    """
    Upper bound on the minimum distortion by restarted local search.

    Args:
        source: Connected graph with at least 2 vertices
        target: Any graph
        seed: Master seed; restart r uses restart_seed(seed, r)
        iterations: Moves per restart, >= 1
        restarts: Number of restarts
        workers: Threads running restarts

    Returns:
        SolverResult with status upper_bound_only; the witness is the least
        (value, assignment) over all restarts, whatever the thread count

    Raises:
        DomainError: iterations < 1, tiny or disconnected source
    """
    config = SolverConfig.from_env()
    iterations = iterations if iterations is not None else config.iterations
    restarts = restarts if restarts is not None else config.restarts
    workers = workers if workers is not None else config.workers
    if iterations < 1:
        raise DomainError(f"iterations must be >= 1, got {iterations}")
    if restarts < 1:
        raise DomainError(f"restarts must be >= 1, got {restarts}")
    if source.vertex_count < 2:
        raise DomainError(f"{source.name} needs at least 2 vertices")
    if not is_connected(source):
        raise DomainError(f"{source.name} is disconnected")

    source_hops = hop_matrix(source).tolist()
    target_hops = hop_matrix(target).tolist()

    def run(restart: int) -> Candidate:
        return local_search(source_hops, target_hops, restart_seed(seed, restart), iterations)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            candidates: List[Candidate] = list(pool.map(run, range(restarts)))
    else:
        candidates = [run(r) for r in range(restarts)]

    value, assignment = min(candidates)
    logger.info(f"Local search {source.name} -> {target.name}: value={format_exact(value)} "
                f"over {restarts} restarts")
    return SolverResult(
        status=SolverStatus.UPPER_BOUND_ONLY,
        value=value,
        witness=EmbeddingMap(source, target, assignment),
        nodes_explored=iterations * restarts,
        method="local_search",
        details={"seed": str(seed), "restarts": str(restarts), "iterations": str(iterations)},
    )
