"""
Laakso-into-diamond distortion table.
"""

from typing import Iterable, List, Optional

from config.settings import SolverConfig
from .exact_solver import min_distortion_exact
from .heuristic import min_distortion_heuristic
from .lower_bound import distortion_lower_bound
from ..models.embedding import SolverStatus
from ..models.graph import GraphFamily
from ..models.reports import GrowthRow
from ..recgraph.generator import generate
from ..utils.exact import INFINITE, format_exact
from ..utils.logger import setup_logger
from ..utils.exceptions import DomainError, InvariantViolation

logger = setup_logger(__name__)


def growth_experiment(
    n_max: int,
    target_levels: Iterable[int],
    config: Optional[SolverConfig] = None,
    subset_size: int = 3,
) -> List[GrowthRow]:
    """
    Upper and lower distortion bounds of L_n into D_m.

    For every n in 1..n_max and every m: a local search upper bound,
    sharpened by the exact search when L_n has at most
    ``config.exact_source_limit`` vertices, and a subset lower bound
    (the exact value itself when the exact search is optimal). The table
    records values only; it makes no claim about growth in n.

    Raises:
        DomainError: n_max < 1 or no target levels
        InvariantViolation: A row with lower > upper
    """
    config = config or SolverConfig.from_env()
    levels = sorted(set(target_levels))
    if n_max < 1:
        raise DomainError(f"n_max must be >= 1, got {n_max}")
    if not levels:
        raise DomainError("growth_experiment needs at least one target level")

    rows = []
    for n in range(1, n_max + 1):
        source = generate(GraphFamily.LAAKSO, n)
        for m in levels:
            target = generate(GraphFamily.DIAMOND, m)
            upper = min_distortion_heuristic(
                source, target, seed=config.seed, iterations=config.iterations,
                restarts=config.restarts, workers=config.workers,
            )
            upper_value, method = upper.value, upper.method
            lower_value = None

            if source.vertex_count <= config.exact_source_limit or source.vertex_count > target.vertex_count:
                exact = min_distortion_exact(source, target, config.node_budget)
                if exact.value <= upper_value:
                    upper_value, method = exact.value, exact.method
                if exact.status in (SolverStatus.OPTIMAL, SolverStatus.INFEASIBLE_INJECTIVE):
                    lower_value = exact.value

            if lower_value is None:
                if subset_size > target.vertex_count:
                    lower_value = INFINITE
                else:
                    lower_value = distortion_lower_bound(
                        source, target, subset_size, config.subset_samples,
                        config.node_budget, config.seed,
                    ).value

            if lower_value > upper_value:
                raise InvariantViolation(
                    f"Lower bound {format_exact(lower_value)} exceeds upper bound "
                    f"{format_exact(upper_value)} for L_{n} -> D_{m}"
                )
            rows.append(GrowthRow(n, m, upper_value, lower_value, method))
            logger.info(f"L_{n} -> D_{m}: [{format_exact(lower_value)}, {format_exact(upper_value)}]")
    return rows
