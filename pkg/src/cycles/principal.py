"""
Principal cycles of subdiamonds, simple cycle enumeration and
classification.
"""

from typing import List, Optional, Sequence

import networkx as nx

from config.settings import AnalysisConfig
from ..models.cycles import Cycle
from ..models.graph import GraphFamily, MetricGraph, Subdiamond
from ..recgraph.gadgets import LEFT, RIGHT
from ..recgraph.generator import geodesic
from ..recgraph.subdiamonds import smallest_enclosing
from ..utils.logger import setup_logger
from ..utils.exceptions import DomainError, EnumerationError, FamilyError, InvariantViolation

logger = setup_logger(__name__)


def principal_cycle(
    graph: MetricGraph,
    subdiamond: Subdiamond,
    left_selector: Sequence[str] = (),
    right_selector: Sequence[str] = (),
) -> Cycle:
    """
    The cycle made of a bottom-to-top geodesic through the leftmost
    vertex and one through the rightmost vertex.

    Args:
        graph: Diamond graph containing the subdiamond
        subdiamond: Subdiamond of height >= 2
        left_selector: Branch choice per depth below the split, for the
            left geodesic (missing entries: LEFT)
        right_selector: Same for the right geodesic (missing entries: RIGHT)

    Returns:
        Cycle starting at the bottom, going up on the left, of
        2 * height hops

    Raises:
        DomainError: Height below 2
    """
    if graph.family != GraphFamily.DIAMOND:
        raise FamilyError(f"Principal cycles are defined on diamond graphs, got {graph.name}")
    if subdiamond.height < 2:
        raise DomainError(f"A subdiamond of height {subdiamond.height} has no principal cycle")
    root = subdiamond.root_edge_path
    left = geodesic(graph, root + (0,), left_selector, LEFT)
    left += geodesic(graph, root + (1,), left_selector, LEFT)[1:]
    right = geodesic(graph, root + (2,), right_selector, RIGHT)
    right += geodesic(graph, root + (3,), right_selector, RIGHT)[1:]
    vertices = left + list(reversed(right))[1:-1]
    return Cycle(tuple(vertices), graph.edge_length)


def enumerate_simple_cycles(graph: MetricGraph, cap: Optional[int] = None) -> List[Cycle]:
    """
    Every simple cycle of the graph, once each, in canonical form.

    Args:
        graph: Any graph
        cap: Maximum number of cycles (default: analysis cycle cap)

    Returns:
        Canonical cycles sorted by length, then vertex sequence

    Raises:
        EnumerationError: More than ``cap`` cycles; details carry the
            number found before stopping
    """
    cap = cap if cap is not None else AnalysisConfig.from_env().cycle_cap
    found = set()
    for raw in nx.simple_cycles(graph.nx_graph):
        if len(raw) < 3:
            continue
        found.add(Cycle(tuple(raw), graph.edge_length).canonical())
        if len(found) > cap:
            raise EnumerationError(
                f"{graph.name} has more than {cap} simple cycles",
                details={"partial_count": len(found), "cap": cap}
            )
    cycles = sorted(found, key=lambda c: (c.hops, c.vertices))
    logger.info(f"Enumerated {len(cycles)} simple cycles of {graph.name}")
    return cycles


def classify_cycle(graph: MetricGraph, cycle: Cycle) -> Subdiamond:
    """
    The subdiamond for which ``cycle`` is a principal cycle.

    The smallest subdiamond containing the cycle is the only candidate; it
    must have height cycle_length / 2 and all four corners on the cycle.

    Raises:
        DomainError: Not a simple cycle of the graph
        InvariantViolation: No subdiamond matches
    """
    if graph.family != GraphFamily.DIAMOND:
        raise FamilyError(f"Cycle classification needs a diamond graph, got {graph.name}")
    if not cycle.is_valid_in(graph):
        raise DomainError(f"{list(cycle.vertices)} is not a simple cycle of {graph.name}")

    subdiamond = smallest_enclosing(graph, cycle.vertices)
    if subdiamond is None:
        raise InvariantViolation(
            f"No subdiamond of {graph.name} contains the cycle",
            details={"cycle": list(cycle.vertices)}
        )
    on_cycle = set(cycle.vertices)
    if cycle.hops != 2 * subdiamond.height or not set(subdiamond.corners) <= on_cycle:
        raise InvariantViolation(
            f"Cycle of {cycle.hops} hops is not principal in its smallest subdiamond "
            f"{subdiamond.root_edge_path} of height {subdiamond.height}",
            details={"cycle": list(cycle.vertices), "subdiamond": subdiamond.to_dict()}
        )
    return subdiamond
