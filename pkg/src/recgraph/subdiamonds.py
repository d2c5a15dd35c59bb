"""
Subdiamond enumeration for diamond graphs.
"""

from itertools import product
from typing import List, Optional, Sequence

from .generator import edge_endpoint_addresses
from ..models.graph import GraphFamily, MetricGraph, Subdiamond, VertexAddress
from ..utils.logger import setup_logger
from ..utils.exceptions import DomainError, FamilyError

logger = setup_logger(__name__)


def subdiamond_at(graph: MetricGraph, root_edge_path: Sequence[int]) -> Subdiamond:
    """
    The subdiamond that evolved from the edge ``root_edge_path`` of D_k.

    Args:
        graph: Diamond graph D_n
        root_edge_path: Edge labels of length k < n

    Returns:
        Subdiamond with its four corners and height 2 ** (n - k)
    """
    _require_diamond(graph)
    path = tuple(root_edge_path)
    depth = len(path)
    if depth >= graph.level:
        raise DomainError(
            f"Edge path of length {depth} has no subdiamond of height >= 2 in {graph.name}",
            details={"path": list(path), "level": graph.level}
        )
    family = GraphFamily.DIAMOND
    tail, head = edge_endpoint_addresses(family, path)
    return Subdiamond(
        root_edge_path=path,
        height=2 ** (graph.level - depth),
        top=graph.vertex_id(head),
        bottom=graph.vertex_id(tail),
        leftmost=graph.vertex_id(VertexAddress.derived(family, depth + 1, path, "a")),
        rightmost=graph.vertex_id(VertexAddress.derived(family, depth + 1, path, "b")),
    )


def enumerate_subdiamonds(graph: MetricGraph, min_height: int = 2) -> List[Subdiamond]:
    """
    Every subdiamond of height at least ``min_height``.

    Subdiamonds are listed by decreasing height, and by root edge path
    within one height; there are 4 ** k of height 2 ** (n - k).

    Args:
        graph: Diamond graph D_n
        min_height: Power of two with 2 <= min_height <= 2 ** n

    Returns:
        List of Subdiamond

    Raises:
        FamilyError: Not a diamond graph
        DomainError: min_height is not an admissible power of two
    """
    _require_diamond(graph)
    n = graph.level
    if min_height < 2 or min_height > 2 ** n or min_height & (min_height - 1):
        raise DomainError(
            f"min_height must be a power of two in [2, {2 ** n}], got {min_height}",
            details={"min_height": min_height, "level": n}
        )
    max_depth = n - (min_height.bit_length() - 1)
    result = []
    for depth in range(max_depth + 1):
        for path in product(range(4), repeat=depth):
            result.append(subdiamond_at(graph, path))
    logger.debug(f"Enumerated {len(result)} subdiamonds of {graph.name} with height >= {min_height}")
    return result


def subdiamond_members(graph: MetricGraph, subdiamond: Subdiamond) -> List[int]:
    """Vertex ids of the subdiamond, top and bottom included."""
    top = graph.addresses[subdiamond.top]
    bottom = graph.addresses[subdiamond.bottom]
    return [
        vid for vid, address in enumerate(graph.addresses)
        if subdiamond.contains_address(address, top, bottom)
    ]


def _require_diamond(graph: MetricGraph) -> None:
    if graph.family != GraphFamily.DIAMOND:
        raise FamilyError(
            f"Subdiamonds exist only in diamond graphs, got {graph.name}",
            details={"family": graph.family.value}
        )


def smallest_enclosing(graph: MetricGraph, vertices: Sequence[int]) -> Optional[Subdiamond]:
    """
    Smallest subdiamond of height >= 2 containing all ``vertices``.

    Candidates are the edges that strictly contain some derived vertex of
    the set, tried from the deepest upward.
    """
    _require_diamond(graph)
    candidates = set()
    for vid in vertices:
        address = graph.addresses[vid]
        if address.birth_level >= 1:
            for depth in range(min(address.birth_level, graph.level)):
                candidates.add(address.path[:depth])
    for path in sorted(candidates, key=lambda p: (-len(p), p)):
        sub = subdiamond_at(graph, path)
        top = graph.addresses[sub.top]
        bottom = graph.addresses[sub.bottom]
        if all(sub.contains_address(graph.addresses[v], top, bottom) for v in vertices):
            return sub
    return None
