"""
Subset lower bounds on the minimum distortion.

Restricting a map to a subset can only lower its distortion, so the exact
minimum distortion of any source subset (with the source metric) into the
target bounds the minimum for the whole source from below.
"""

import random
from itertools import combinations
from math import comb
from typing import List, Optional, Tuple

from config.settings import SolverConfig
from .exact_solver import min_distortion_on_matrix
from .orbits import orbit_representatives
from ..models.graph import MetricGraph
from ..models.reports import SubsetLowerBound
from ..metric.shortest_paths import hop_matrix
from ..utils.exact import INFINITE, format_exact
from ..utils.logger import setup_logger
from ..utils.exceptions import BudgetError, DomainError

logger = setup_logger(__name__)

SUBSET_SIZES = (2, 3, 4)


def _subsets(size: int, subset_size: int, samples: int, seed: int) -> List[Tuple[int, ...]]:
    """All subsets in lexicographic order when few enough, else a seeded sample."""
    if comb(size, subset_size) <= samples:
        return list(combinations(range(size), subset_size))
    rng = random.Random(seed)
    chosen = set()
    while len(chosen) < samples:
        chosen.add(tuple(sorted(rng.sample(range(size), subset_size))))
    return sorted(chosen)


def distortion_lower_bound(
    source: MetricGraph,
    target: MetricGraph,
    subset_size: int = 3,
    samples: Optional[int] = None,
    budget: Optional[int] = None,
    seed: int = 0,
) -> SubsetLowerBound:
    """
    Largest exact subset distortion over sampled source subsets.

    Args:
        source: Source graph
        target: Target graph
        subset_size: 2, 3 or 4
        samples: Number of subsets (all of them when there are fewer)
        budget: Work limit; |V(target)| ** subset_size must fit
        seed: Sampling seed

    Returns:
        SubsetLowerBound with the first subset reaching the maximum

    Raises:
        DomainError: subset_size outside {2, 3, 4} or larger than the source
        BudgetError: The budget cannot cover one subset
    """
    config = SolverConfig.from_env()
    samples = samples if samples is not None else config.subset_samples
    budget = budget if budget is not None else config.node_budget
    if subset_size not in SUBSET_SIZES:
        raise DomainError(f"subset_size must be one of {SUBSET_SIZES}, got {subset_size}")
    if subset_size > source.vertex_count:
        raise DomainError(f"{source.name} has fewer than {subset_size} vertices")
    if samples < 1:
        raise DomainError(f"samples must be >= 1, got {samples}")
    work = target.vertex_count ** subset_size
    if work > budget:
        raise BudgetError(
            f"Exhaustive {subset_size}-point search into {target.name} needs {work} "
            f"assignments, above the budget of {budget}",
            details={"work": work, "budget": budget}
        )

    source_hops = hop_matrix(source)
    target_hops = hop_matrix(target).tolist()
    roots = orbit_representatives(target)

    best, witness = None, ()
    subsets = _subsets(source.vertex_count, subset_size, samples, seed)
    for subset in subsets:
        if subset_size > target.vertex_count:
            value = INFINITE
        else:
            sub = source_hops[list(subset)][:, list(subset)].tolist()
            search = min_distortion_on_matrix(sub, target_hops, roots, budget)
            if not search.exhausted:
                raise BudgetError(
                    f"Subset {subset} was not searched exhaustively within {budget} nodes",
                    details={"subset": list(subset), "budget": budget}
                )
            value = search.value
        if best is None or value > best:
            best, witness = value, subset

    logger.info(f"Subset lower bound {source.name} -> {target.name}: {format_exact(best)} "
                f"from {len(subsets)} subsets of size {subset_size}")
    return SubsetLowerBound(best, witness, len(subsets), subset_size)
