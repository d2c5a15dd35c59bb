"""
Collapse quotients of diamond graphs.

Collapsing a subdiamond S of height H replaces it by a path of H hops
from top_S to bottom_S; every vertex v of S goes to the path vertex at
position d(v, top_S). Vertices of S at the same position merge.
"""

import random
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

from ..models.cycles import QuotientGraph
from ..models.graph import (
    AddressKind,
    GraphFamily,
    MetricGraph,
    Subdiamond,
    VertexAddress,
    new_graph,
)
from ..metric.shortest_paths import bfs_hops
from ..recgraph.gadgets import gadget_for
from ..recgraph.generator import index_to_path
from ..recgraph.subdiamonds import subdiamond_members
from ..utils.logger import setup_logger
from ..utils.exceptions import DomainError, FamilyError, PreconditionError

logger = setup_logger(__name__)


def path_address(root_edge_path: Sequence[int], position: int) -> VertexAddress:
    """Address of the position-``position`` vertex of a collapse path."""
    return VertexAddress(GraphFamily.DIAMOND, AddressKind.COLLAPSED,
                         path=tuple(root_edge_path), slot=f"p{position}")


def collapse_subdiamonds(graph: MetricGraph, subdiamonds: Iterable[Subdiamond]) -> QuotientGraph:
    """
    Replace each listed subdiamond by a path of its height.

    Args:
        graph: Diamond graph
        subdiamonds: Pairwise non-nested subdiamonds of height >= 2

    Returns:
        QuotientGraph of the generic family; quotient ids follow the
        original ids of the first vertex mapped to each quotient vertex

    Raises:
        FamilyError: Not a diamond graph
        PreconditionError: Two subdiamonds are nested, naming the pair
    """
    if graph.family != GraphFamily.DIAMOND:
        raise FamilyError(f"Collapse is defined on diamond graphs, got {graph.name}")
    subdiamonds = tuple(subdiamonds)
    for sub in subdiamonds:
        if sub.height < 2:
            raise DomainError(f"Subdiamond {sub.root_edge_path} has height {sub.height} < 2")
    for i, first in enumerate(subdiamonds):
        for second in subdiamonds[i + 1:]:
            if first.is_nested_in(second) or second.is_nested_in(first):
                raise PreconditionError(
                    f"Subdiamonds {first.root_edge_path} and {second.root_edge_path} are nested",
                    details={"pair": [list(first.root_edge_path), list(second.root_edge_path)]}
                )

    keys: List[Hashable] = [("vertex", v) for v in range(graph.vertex_count)]
    for index, sub in enumerate(subdiamonds):
        from_top = bfs_hops(graph, sub.top, max_hops=sub.height)
        for v in subdiamond_members(graph, sub):
            if v != sub.top and v != sub.bottom:
                keys[v] = ("path", index, from_top[v])

    ids: Dict[Hashable, int] = {}
    addresses: List[VertexAddress] = []
    projection = []
    for v, key in enumerate(keys):
        if key not in ids:
            ids[key] = len(addresses)
            if key[0] == "vertex":
                addresses.append(graph.addresses[v])
            else:
                addresses.append(path_address(subdiamonds[key[1]].root_edge_path, key[2]))
        projection.append(ids[key])

    edges = []
    seen = set()
    for x, y in graph.edges:
        px, py = projection[x], projection[y]
        pair = (min(px, py), max(px, py))
        if px != py and pair not in seen:
            seen.add(pair)
            edges.append((px, py))

    quotient = new_graph(
        GraphFamily.GENERIC, graph.level, graph.normalization, graph.scale_base,
        addresses, edges, name=f"{graph.name}/collapse[{len(subdiamonds)}]",
    )
    logger.info(f"Collapsed {len(subdiamonds)} subdiamonds of {graph.name}: "
                f"{quotient.vertex_count} vertices, {quotient.edge_count} edges")
    return QuotientGraph(quotient, tuple(projection), subdiamonds, graph)


def subdivide(graph: MetricGraph) -> MetricGraph:
    """
    Insert a midpoint into every edge.

    Original vertices keep their ids and addresses; the midpoint of edge
    index i gets id vertex_count + i and a path address at position 1,
    keyed by the edge's label path for recursive families.
    """
    count = graph.vertex_count
    addresses = list(graph.addresses)
    edges = []
    for index, (x, y) in enumerate(graph.edges):
        if graph.family.is_recursive:
            label_path = index_to_path(index, graph.level, gadget_for(graph.family).base)
        else:
            label_path = (index,)
        addresses.append(path_address(label_path, 1))
        edges.append((x, count + index))
        edges.append((count + index, y))
    return new_graph(GraphFamily.GENERIC, graph.level, graph.normalization, graph.scale_base,
                     addresses, edges, name=f"{graph.name}/subdivided")


def quotient_violations(
    quotient: QuotientGraph,
    pairs: Optional[Sequence[Tuple[int, int]]] = None,
    samples: int = 100,
    seed: int = 0,
) -> List[str]:
    """
    Check the quotient invariants.

    Surjectivity; d(P(v), P(top_S)) = d(v, top_S) and the same for
    bottom_S, for every v in a collapsed S; and 1-Lipschitz behaviour on
    ``pairs`` (default: ``samples`` seeded random pairs).
    """
    graph, original, projection = quotient.graph, quotient.original, quotient.projection
    problems = []
    if set(projection) != set(range(graph.vertex_count)):
        problems.append("projection is not surjective")

    for sub in quotient.collapsed:
        for end in (sub.top, sub.bottom):
            before = bfs_hops(original, end)
            after = bfs_hops(graph, projection[end])
            for v in subdiamond_members(original, sub):
                if after[projection[v]] != before[v]:
                    problems.append(
                        f"vertex {v} of {sub.root_edge_path} is {before[v]} hops from {end} "
                        f"but {after[projection[v]]} after collapse"
                    )

    if pairs is None:
        rng = random.Random(seed)
        n = original.vertex_count
        pairs = [(rng.randrange(n), rng.randrange(n)) for _ in range(samples)]
    by_source: Dict[int, List[int]] = {}
    for x, y in pairs:
        by_source.setdefault(x, []).append(y)
    for x, targets in sorted(by_source.items()):
        before = bfs_hops(original, x)
        after = bfs_hops(graph, projection[x])
        for y in targets:
            if after[projection[y]] > before[y]:
                problems.append(f"pair ({x}, {y}) expands from {before[y]} to {after[projection[y]]}")
    return problems
