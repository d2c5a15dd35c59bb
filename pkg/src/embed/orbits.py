"""
Vertex orbits under automorphisms read off the recursive structure.

The generators are address permutations: swapping the two branches of one
gadget copy, reversing bottom and top for the reversible gadgets, and
swapping sibling subtrees of a quaternary tree. Orbits of the generated
group are the connected components of the generator cycles, so every
orbit reported here lies inside a true automorphism orbit.
"""

from itertools import product
from typing import Callable, Dict, List, Tuple

import networkx as nx

from ..models.graph import AddressKind, GraphFamily, MetricGraph, VertexAddress
from ..recgraph.gadgets import Gadget, gadget_for
from ..utils.logger import setup_logger

logger = setup_logger(__name__)

AddressMap = Callable[[VertexAddress], VertexAddress]


def _branch_swap(gadget: Gadget, copy: Tuple[int, ...]) -> AddressMap:
    depth = len(copy)
    labels = gadget.label_permutation(gadget.branch_swap, flip=False)

    def apply(address: VertexAddress) -> VertexAddress:
        if address.kind != AddressKind.DERIVED or address.birth_level <= depth:
            return address
        if address.path[:depth] != copy:
            return address
        if address.birth_level == depth + 1:
            slot = gadget.branch_swap.get(address.slot, address.slot)
            return VertexAddress.derived(address.family, address.birth_level, address.path, slot)
        path = copy + (labels[address.path[depth]],) + address.path[depth + 1:]
        return VertexAddress.derived(address.family, address.birth_level, path, address.slot)

    return apply


def _reversal(gadget: Gadget) -> AddressMap:
    labels = gadget.label_permutation(gadget.reversal, flip=True)

    def apply(address: VertexAddress) -> VertexAddress:
        if address.kind == AddressKind.ROOT_BOTTOM:
            return VertexAddress.top(address.family)
        if address.kind == AddressKind.ROOT_TOP:
            return VertexAddress.bottom(address.family)
        path = tuple(labels[label] for label in address.path)
        return VertexAddress.derived(address.family, address.birth_level, path,
                                     gadget.reversal[address.slot])

    return apply


def _subtree_swap(node: Tuple[int, ...], first: int, second: int) -> AddressMap:
    depth = len(node)

    def apply(address: VertexAddress) -> VertexAddress:
        path = address.path
        if len(path) <= depth or path[:depth] != node or path[depth] not in (first, second):
            return address
        digit = second if path[depth] == first else first
        return VertexAddress(address.family, address.kind, path=node + (digit,) + path[depth + 1:])

    return apply


def generators(graph: MetricGraph) -> List[AddressMap]:
    """Automorphism generators of a family graph, as address maps."""
    if graph.family.is_recursive:
        gadget = gadget_for(graph.family)
        maps = [
            _branch_swap(gadget, copy)
            for depth in range(graph.level)
            for copy in product(range(gadget.base), repeat=depth)
        ]
        if gadget.reversible and graph.level > 0:
            maps.append(_reversal(gadget))
        return maps
    if graph.family == GraphFamily.QUATERNARY_TREE:
        return [
            _subtree_swap(node, digit, digit + 1)
            for depth in range(graph.level)
            for node in product(range(4), repeat=depth)
            for digit in range(3)
        ]
    return []


def automorphism_orbits(graph: MetricGraph) -> Tuple[int, ...]:
    """
    Orbit representative (least id) of every vertex.

    Generic graphs get singleton orbits.

    Returns:
        Tuple of representative ids, indexed by vertex id
    """
    union = nx.utils.UnionFind(range(graph.vertex_count))
    for apply in generators(graph):
        for vertex, address in enumerate(graph.addresses):
            image = graph.vertex_id(apply(address))
            if image != vertex:
                union.union(vertex, image)

    members: Dict[int, List[int]] = {}
    for vertex in range(graph.vertex_count):
        members.setdefault(union[vertex], []).append(vertex)
    representative = [0] * graph.vertex_count
    for group in members.values():
        least = min(group)
        for vertex in group:
            representative[vertex] = least
    logger.debug(f"{graph.name}: {len(members)} vertex orbits")
    return tuple(representative)


def orbit_representatives(graph: MetricGraph) -> List[int]:
    """Least vertex id of every orbit, ascending."""
    return sorted(set(automorphism_orbits(graph)))
