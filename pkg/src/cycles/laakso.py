"""
Isometric cycles of Laakso graphs and the quaternary cycle families.

Every gadget copy of a Laakso graph has a central quadrilateral
junction_low - mid_left - junction_high - mid_right. Expanding the four
sides by bottom-to-top geodesics gives the copy's central cycle; a copy
grown from a level-(n - h) edge has a central cycle of 4 ** h hops.
"""

from typing import Dict, List, Optional, Sequence, Tuple

from ..models.cycles import Cycle, CycleFamily
from ..models.graph import GraphFamily, MetricGraph
from ..metric.shortest_paths import bfs_hops
from ..recgraph.generator import geodesic
from ..utils.logger import setup_logger
from ..utils.exceptions import DomainError, FamilyError, PreconditionError

logger = setup_logger(__name__)

# edge labels of the quadrilateral sides: low-left, left-high, low-right, right-high
_LOW_LEFT, _LEFT_HIGH, _LOW_RIGHT, _RIGHT_HIGH = 1, 3, 2, 4
QUAD_SIDES = (_LOW_LEFT, _LEFT_HIGH, _RIGHT_HIGH, _LOW_RIGHT)


def _require_laakso(graph: MetricGraph) -> None:
    if graph.family != GraphFamily.LAAKSO:
        raise FamilyError(
            f"Central cycles are defined on Laakso graphs, got {graph.name}",
            details={"family": graph.family.value}
        )


def central_cycle(graph: MetricGraph, copy: Sequence[int]) -> Cycle:
    """
    Central cycle of the gadget copy grown from edge ``copy``.

    Args:
        graph: Laakso graph L_n
        copy: Edge label path of length < n

    Returns:
        Cycle starting at the copy's junction_low, going up the left side
    """
    _require_laakso(graph)
    copy = tuple(copy)
    if len(copy) >= graph.level:
        raise DomainError(f"Edge path {copy} has no gadget copy in {graph.name}")
    low_left = geodesic(graph, copy + (_LOW_LEFT,))
    left_high = geodesic(graph, copy + (_LEFT_HIGH,))
    right_high = geodesic(graph, copy + (_RIGHT_HIGH,))
    low_right = geodesic(graph, copy + (_LOW_RIGHT,))
    vertices = (
        low_left[:-1]
        + left_high[:-1]
        + list(reversed(right_high))[:-1]
        + list(reversed(low_right))[:-1]
    )
    return Cycle(tuple(vertices), graph.edge_length)


def isometric_cycle(graph: MetricGraph, h: int, copy_selector: Optional[Sequence[int]] = None) -> Cycle:
    """
    A cycle of 4 ** h hops whose cycle distances equal graph distances.

    Args:
        graph: Laakso graph L_n
        h: 1 <= h <= n
        copy_selector: Edge path of length n - h naming the gadget copy
            (default: all labels 0)

    Raises:
        DomainError: h out of range or selector of the wrong length
    """
    _require_laakso(graph)
    n = graph.level
    if not 1 <= h <= n:
        raise DomainError(f"h must be in [1, {n}], got {h}", details={"h": h, "level": n})
    copy = tuple(copy_selector) if copy_selector is not None else (0,) * (n - h)
    if len(copy) != n - h:
        raise DomainError(
            f"Copy selector must have {n - h} labels for h = {h}, got {len(copy)}",
            details={"copy": list(copy)}
        )
    if any(not 0 <= label < 6 for label in copy):
        raise DomainError(f"Copy selector {copy} has labels outside 0..5")
    return central_cycle(graph, copy)


def check_isometric(graph: MetricGraph, cycle: Cycle) -> List[Tuple[int, int]]:
    """
    Position pairs whose graph distance differs from their cycle distance.

    An empty list means the cycle is an isometric subgraph.
    """
    mismatches = []
    positions = cycle.vertices
    for i, x in enumerate(positions):
        hops = bfs_hops(graph, x)
        for j in range(i + 1, len(positions)):
            if hops[positions[j]] != cycle.cyclic_distance(i, j):
                mismatches.append((i, j))
    return mismatches


def canonical_cycle(graph: MetricGraph) -> Cycle:
    """The central cycle of the outermost gadget, 4 ** n hops."""
    return isometric_cycle(graph, graph.level, ())


def default_root_copy(n: int, s: int) -> Tuple[int, ...]:
    """A level-(n - s) copy on the low-left side of the outermost quadrilateral."""
    return (_LOW_LEFT,) + (0,) * (n - s - 1)


def cycle_family(
    graph: MetricGraph,
    s: int,
    t: int,
    root_selector: Optional[Sequence[int]] = None,
) -> CycleFamily:
    """
    Cycles indexed by the quaternary tree of depth s - t.

    The root is the central cycle of a copy of size 4 ** s touching the
    canonical 4 ** n cycle. The children of a node are the central cycles
    of the copies grown from its four quadrilateral sides; they are
    labelled 0 to 3 in the cyclic order of the parent cycle, read from the
    parent vertex nearest the graph bottom (ties: lower id) toward its
    lower-id neighbour.

    Args:
        graph: Laakso graph L_n
        s: Root exponent
        t: Leaf exponent, n > s >= t >= 1 (s == t gives the root alone)
        root_selector: Edge path of length n - s for the root copy

    Raises:
        DomainError: Parameter order violated
        PreconditionError: The selected root misses the canonical cycle
    """
    _require_laakso(graph)
    n = graph.level
    if not n > s >= t >= 1:
        raise DomainError(
            f"cycle_family needs n > s >= t >= 1, got n={n}, s={s}, t={t}",
            details={"n": n, "s": s, "t": t}
        )
    root_copy = tuple(root_selector) if root_selector is not None else default_root_copy(n, s)
    root = isometric_cycle(graph, s, root_copy)
    canonical = canonical_cycle(graph)
    if not set(root.vertices) & set(canonical.vertices):
        raise PreconditionError(
            f"Root copy {root_copy} does not meet the canonical cycle of {graph.name}",
            details={"root_copy": list(root_copy)}
        )

    from_bottom = bfs_hops(graph, graph.bottom)
    tree: Dict[Tuple[int, ...], Cycle] = {(): root}
    copies: Dict[Tuple[int, ...], Tuple[int, ...]] = {(): root_copy}
    frontier = [()]
    for _ in range(s - t):
        next_frontier = []
        for label in frontier:
            parent = tree[label]
            oriented = _oriented(parent, from_bottom)
            position = {v: i for i, v in enumerate(oriented)}
            children = []
            for side in QUAD_SIDES:
                copy = copies[label] + (side,)
                cycle = central_cycle(graph, copy)
                touch = min(position[v] for v in cycle.vertices if v in position)
                children.append((touch, copy, cycle))
            children.sort(key=lambda item: item[0])
            for digit, (_, copy, cycle) in enumerate(children):
                tree[label + (digit,)] = cycle
                copies[label + (digit,)] = copy
                next_frontier.append(label + (digit,))
        frontier = next_frontier

    family = CycleFamily(n, s, t, tree, copies, canonical)
    logger.info(f"Built cycle family n={n} s={s} t={t} with {len(tree)} cycles")
    return family


def _oriented(cycle: Cycle, from_bottom: List[int]) -> List[int]:
    seq = list(cycle.vertices)
    start = min(range(len(seq)), key=lambda i: (from_bottom[seq[i]], seq[i]))
    seq = seq[start:] + seq[:start]
    if seq[-1] < seq[1]:
        seq = [seq[0]] + list(reversed(seq[1:]))
    return seq
