"""
Graph generator for diamond, Laakso, M and quaternary tree families.

Graphs are built level by level: every edge of level k - 1, visited in
label-path order, is replaced by its gadget. Gadget endpoints reuse the
existing vertex ids and new slot vertices get fresh ids, so vertex ids are
assigned in generation order and the vertices of level k - 1 keep their
ids (and addresses) at level k.
"""

from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from config.settings import GenerationConfig
from .gadgets import gadget_for, LEFT
from ..models.graph import (
    AddressKind,
    GraphFamily,
    MetricGraph,
    Normalization,
    VertexAddress,
    new_graph,
)
from ..models.embedding import EmbeddingMap
from ..utils.logger import setup_logger
from ..utils.exceptions import DomainError, FamilyError, SizeLimitError, UsageError

logger = setup_logger(__name__)


def expected_counts(family: GraphFamily, level: int) -> Tuple[int, int]:
    """
    Closed-form (vertex_count, edge_count) of a family graph.

    Args:
        family: Graph family (not generic)
        level: Level, or depth for quaternary trees

    Returns:
        Tuple of (vertex_count, edge_count)
    """
    if family == GraphFamily.QUATERNARY_TREE:
        vertices = (4 ** (level + 1) - 1) // 3
        return vertices, vertices - 1
    gadget = gadget_for(family)
    base = gadget.base
    edges = base ** level
    vertices = 2 + len(gadget.slots) * (edges - 1) // (base - 1)
    return vertices, edges


def generate(
    family,
    level: int,
    normalization=Normalization.UNWEIGHTED,
    max_edges: Optional[int] = None,
) -> MetricGraph:
    """
    Generate the level-``level`` graph of a family.

    Args:
        family: GraphFamily or its name
        level: Level n (depth a for quaternary trees), n >= 0
        normalization: Unweighted (edge length 1) or weighted
            (edge length gadget_diameter ** -n)
        max_edges: Edge cap (default: MFL_MAX_EDGES or 10**7)

    Returns:
        The generated MetricGraph

    Raises:
        UsageError: Unknown family
        DomainError: Negative level
        SizeLimitError: The graph would exceed the edge cap
    """
    if not isinstance(family, GraphFamily):
        family = GraphFamily.parse(str(family))
    if not isinstance(normalization, Normalization):
        try:
            normalization = Normalization(str(normalization))
        except ValueError:
            raise UsageError(f"Unknown normalization: {normalization}")
    if family == GraphFamily.GENERIC:
        raise UsageError("Generic graphs are built from edge lists, not generated")
    if not isinstance(level, int) or level < 0:
        raise DomainError(f"Level must be a nonnegative integer, got {level}")

    cap = max_edges if max_edges is not None else GenerationConfig.from_env().max_edges
    _, edge_count = expected_counts(family, level)
    if edge_count > cap:
        raise SizeLimitError(
            f"{family.value} level {level} has {edge_count} edges, above the cap of {cap}",
            details={"family": family.value, "level": level, "cap": cap}
        )

    if family == GraphFamily.QUATERNARY_TREE:
        graph = _generate_tree(level, normalization)
    else:
        graph = _generate_recursive(family, level, normalization)

    logger.info(f"Generated {graph.name}: {graph.vertex_count} vertices, {graph.edge_count} edges")
    return graph


def _generate_recursive(family: GraphFamily, level: int,
                        normalization: Normalization) -> MetricGraph:
    gadget = gadget_for(family)
    base = gadget.base
    addresses: List[VertexAddress] = [VertexAddress.bottom(family), VertexAddress.top(family)]
    edges: List[Tuple[int, int]] = [(0, 1)]

    for k in range(1, level + 1):
        new_edges: List[Tuple[int, int]] = []
        for index, (u, v) in enumerate(edges):
            path = index_to_path(index, k - 1, base)
            ids = {"u": u, "v": v}
            for slot in gadget.slots:
                ids[slot] = len(addresses)
                addresses.append(VertexAddress.derived(family, k, path, slot))
            for tail, head in gadget.edges:
                new_edges.append((ids[tail], ids[head]))
        edges = new_edges

    return new_graph(family, level, normalization, gadget.diameter, addresses, edges)


def _generate_tree(depth: int, normalization: Normalization) -> MetricGraph:
    family = GraphFamily.QUATERNARY_TREE
    addresses = [VertexAddress(family, AddressKind.SEQUENCE, path=())]
    edges: List[Tuple[int, int]] = []
    frontier = [0]
    for _ in range(depth):
        next_frontier = []
        for parent in frontier:
            parent_path = addresses[parent].path
            for digit in range(4):
                child = len(addresses)
                addresses.append(VertexAddress(family, AddressKind.SEQUENCE, path=parent_path + (digit,)))
                edges.append((parent, child))
                next_frontier.append(child)
        frontier = next_frontier
    return new_graph(family, depth, normalization, 1, addresses, edges)


def build_generic(
    edges: Iterable[Tuple[int, int]],
    vertex_count: Optional[int] = None,
    name: str = "",
    normalization: Normalization = Normalization.UNWEIGHTED,
) -> MetricGraph:
    """
    Build a generic unit-length graph from an edge list.

    Args:
        edges: Pairs of 0-based vertex ids
        vertex_count: Number of vertices (default: 1 + largest id)
        name: Display name

    Returns:
        MetricGraph of the generic family

    Raises:
        DomainError: Self-loops or parallel edges
    """
    edge_list = [(int(u), int(v)) for u, v in edges]
    if vertex_count is None:
        vertex_count = 1 + max((max(e) for e in edge_list), default=0)
    seen = set()
    for u, v in edge_list:
        if u == v:
            raise DomainError(f"Self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DomainError(f"Parallel edge {key}")
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise DomainError(f"Edge {key} leaves the vertex range 0..{vertex_count - 1}")
        seen.add(key)
    family = GraphFamily.GENERIC
    addresses = [VertexAddress(family, AddressKind.GENERIC, slot=str(v)) for v in range(vertex_count)]
    graph = new_graph(family, 0, normalization, 1, addresses, edge_list,
                      name=name or f"generic:{vertex_count}")
    return graph


def cycle_graph(length: int) -> MetricGraph:
    """The cycle C_length as a generic graph."""
    if length < 3:
        raise DomainError(f"A cycle needs at least 3 vertices, got {length}")
    return build_generic([(i, (i + 1) % length) for i in range(length)], length, name=f"cycle:{length}")


def index_to_path(index: int, length: int, base: int) -> Tuple[int, ...]:
    """Base-``base`` digits of ``index``, most significant first."""
    digits = [0] * length
    for position in range(length - 1, -1, -1):
        index, digits[position] = divmod(index, base)
    return tuple(digits)


def path_to_index(path: Sequence[int], base: int) -> int:
    index = 0
    for label in path:
        index = index * base + label
    return index


def edge_endpoint_addresses(family: GraphFamily,
                            path: Sequence[int]) -> Tuple[VertexAddress, VertexAddress]:
    """
    Addresses of the tail and head of the edge with label path ``path``.

    The edge belongs to level len(path); its endpoints exist at every
    higher level with the same addresses.
    """
    gadget = gadget_for(family)
    tail, head = VertexAddress.bottom(family), VertexAddress.top(family)
    for depth, label in enumerate(path):
        if not 0 <= label < gadget.base:
            raise DomainError(f"Edge label {label} is outside 0..{gadget.base - 1}")
        ends = {"u": tail, "v": head}
        slot_tail, slot_head = gadget.edges[label]
        prefix = tuple(path[:depth])
        tail = ends.get(slot_tail) or VertexAddress.derived(family, depth + 1, prefix, slot_tail)
        head = ends.get(slot_head) or VertexAddress.derived(family, depth + 1, prefix, slot_head)
    return tail, head


def edge_endpoints(graph: MetricGraph, path: Sequence[int]) -> Tuple[int, int]:
    """Vertex ids of the tail and head of the level-len(path) edge ``path``."""
    _require_recursive(graph)
    if len(path) > graph.level:
        raise DomainError(f"Edge path of length {len(path)} is deeper than level {graph.level}")
    gadget = gadget_for(graph.family)
    if len(path) == graph.level:
        return graph.edges[path_to_index(path, gadget.base)]
    tail, head = edge_endpoint_addresses(graph.family, path)
    return graph.vertex_id(tail), graph.vertex_id(head)


def geodesic(graph: MetricGraph, path: Sequence[int], choices: Sequence[str] = (),
             default: str = LEFT) -> List[int]:
    """
    A bottom-to-top geodesic through the sub-structure of edge ``path``.

    Args:
        graph: Recursive family graph
        path: Edge label path of length k <= level
        choices: Branch (LEFT / RIGHT) taken at relative depth 0, 1, ...
            by every gadget on the way; missing entries use ``default``

    Returns:
        Vertex ids from the edge's tail to its head
    """
    _require_recursive(graph)
    gadget = gadget_for(graph.family)
    paths = [tuple(path)]
    for depth in range(len(path), graph.level):
        relative = depth - len(path)
        branch = choices[relative] if relative < len(choices) else default
        labels = gadget.geodesic_labels(branch)
        paths = [p + (label,) for p in paths for label in labels]
    vertices = [edge_endpoints(graph, paths[0])[0]]
    for p in paths:
        vertices.append(edge_endpoints(graph, p)[1])
    return vertices


def include_from_level(graph: MetricGraph, lower_level: int) -> EmbeddingMap:
    """
    Address-preserving inclusion of the level-``lower_level`` graph.

    Args:
        graph: Recursive family graph of level n
        lower_level: Level 0 <= m < n

    Returns:
        EmbeddingMap from the level-m graph (same family and
        normalization) into ``graph``

    Raises:
        FamilyError: Not a recursive family
        DomainError: lower_level out of range
    """
    _require_recursive(graph)
    if not 0 <= lower_level < graph.level:
        raise DomainError(
            f"Cannot include level {lower_level} into level {graph.level}",
            details={"level": graph.level, "lower_level": lower_level}
        )
    lower = generate(graph.family, lower_level, graph.normalization)
    assignment = tuple(graph.vertex_id(address) for address in lower.addresses)
    gadget = gadget_for(graph.family)
    if graph.normalization == Normalization.WEIGHTED:
        scale = Fraction(1)
    else:
        scale = Fraction(gadget.diameter ** (graph.level - lower_level))
    return EmbeddingMap(lower, graph, assignment, scale_hint=scale)


def include_lower_level(graph: MetricGraph) -> EmbeddingMap:
    """
    Inclusion of level n - 1 into ``graph`` (level n).

    Under the weighted normalization it preserves distances; unweighted,
    it multiplies every distance by the gadget diameter.

    Raises:
        DomainError: Level 0
    """
    _require_recursive(graph)
    if graph.level == 0:
        raise DomainError(f"{graph.name} has no lower level to include")
    return include_from_level(graph, graph.level - 1)


def _require_recursive(graph: MetricGraph) -> None:
    if not graph.family.is_recursive:
        raise FamilyError(
            f"{graph.name} is not a diamond, Laakso or M graph",
            details={"family": graph.family.value}
        )


def graph_from_spec(spec: str, max_edges: Optional[int] = None) -> MetricGraph:
    """
    Parse the compact ``family:level[:weighted]`` syntax and generate.

    Raises:
        UsageError: Malformed spec
    """
    parts = spec.strip().split(":")
    if len(parts) not in (2, 3):
        raise UsageError(f"Graph spec must look like family:level[:weighted], got {spec!r}")
    family = GraphFamily.parse(parts[0])
    try:
        level = int(parts[1])
    except ValueError:
        raise UsageError(f"Level in {spec!r} is not an integer")
    normalization = Normalization.UNWEIGHTED
    if len(parts) == 3:
        if parts[2] not in ("weighted", "unweighted"):
            raise UsageError(f"Unknown normalization in {spec!r}")
        normalization = Normalization(parts[2])
    if family == GraphFamily.GENERIC:
        raise UsageError("Generic graphs are loaded from graph documents")
    return generate(family, level, normalization, max_edges=max_edges)
