"""
Graph models shared by every module.

A MetricGraph is an immutable, uniformly weighted, undirected graph whose
vertices carry hierarchical addresses. Distances are kept as integer hop
counts; the exact edge length is applied only when a length is presented.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Dict, List, Optional, Tuple

import networkx as nx

from ..utils.exceptions import UsageError, VertexRangeError


class GraphFamily(str, Enum):
    """Supported graph families."""
    DIAMOND = "diamond"
    LAAKSO = "laakso"
    M_VARIANT = "m_variant"
    QUATERNARY_TREE = "quaternary_tree"
    GENERIC = "generic"

    @property
    def prefix(self) -> str:
        return _FAMILY_PREFIX[self]

    @property
    def is_recursive(self) -> bool:
        """True for the families generated by edge substitution."""
        return self in (GraphFamily.DIAMOND, GraphFamily.LAAKSO, GraphFamily.M_VARIANT)

    @classmethod
    def parse(cls, name: str) -> "GraphFamily":
        """Parse a family name or its one-letter prefix."""
        key = name.strip().lower()
        for family in cls:
            if key in (family.value, family.prefix):
                return family
        if key in ("m", "m-variant", "mvariant"):
            return cls.M_VARIANT
        if key in ("tree", "quaternary-tree", "q"):
            return cls.QUATERNARY_TREE
        raise UsageError(
            f"Unknown graph family: {name}",
            details={"known": [family.value for family in cls]}
        )


_FAMILY_PREFIX = {
    GraphFamily.DIAMOND: "d",
    GraphFamily.LAAKSO: "l",
    GraphFamily.M_VARIANT: "m",
    GraphFamily.QUATERNARY_TREE: "q",
    GraphFamily.GENERIC: "g",
}


class Normalization(str, Enum):
    """Edge length conventions."""
    UNWEIGHTED = "unweighted"
    WEIGHTED = "weighted"


class AddressKind(str, Enum):
    """What an address denotes."""
    ROOT_BOTTOM = "root_bottom"
    ROOT_TOP = "root_top"
    DERIVED = "derived"
    SEQUENCE = "sequence"  # quaternary tree node
    COLLAPSED = "collapsed"  # path vertex of a collapse quotient
    GENERIC = "generic"


@dataclass(frozen=True)
class VertexAddress:
    """
    Hierarchical vertex address.

    A derived vertex is born at ``birth_level`` k inside the gadget that
    replaces the edge of level k - 1 with label sequence ``path``;
    ``slot`` names its position in that gadget. Addresses do not change
    when a graph is expanded to a higher level.
    """

    family: GraphFamily
    kind: AddressKind
    birth_level: int = 0
    path: Tuple[int, ...] = ()
    slot: str = ""

    @classmethod
    def bottom(cls, family: GraphFamily) -> "VertexAddress":
        return cls(family, AddressKind.ROOT_BOTTOM)

    @classmethod
    def top(cls, family: GraphFamily) -> "VertexAddress":
        return cls(family, AddressKind.ROOT_TOP)

    @classmethod
    def derived(cls, family: GraphFamily, birth_level: int,
                path: Tuple[int, ...], slot: str) -> "VertexAddress":
        return cls(family, AddressKind.DERIVED, birth_level, tuple(path), slot)

    def label(self) -> str:
        """Render the address string, e.g. ``d:3:03:a``."""
        prefix = self.family.prefix
        digits = "".join(str(label) for label in self.path)
        if self.kind == AddressKind.ROOT_BOTTOM:
            return f"{prefix}:bottom"
        if self.kind == AddressKind.ROOT_TOP:
            return f"{prefix}:top"
        if self.kind == AddressKind.DERIVED:
            return f"{prefix}:{self.birth_level}:{digits}:{self.slot}"
        if self.kind == AddressKind.SEQUENCE:
            return f"q:r{digits}"
        if self.kind == AddressKind.COLLAPSED:
            return f"c:{digits}:{self.slot}"
        return f"g:{self.slot}"

    def __str__(self) -> str:
        return self.label()


def parse_address(text: str, family: GraphFamily) -> VertexAddress:
    """
    Parse an address string produced by ``VertexAddress.label``.

    Args:
        text: Address string
        family: Family of the graph the address belongs to

    Returns:
        The parsed VertexAddress

    Raises:
        UsageError: If the string is malformed
    """
    parts = text.split(":")
    try:
        head = parts[0]
        if head == "q":
            return VertexAddress(GraphFamily.QUATERNARY_TREE, AddressKind.SEQUENCE,
                                 path=tuple(int(c) for c in parts[1][1:]))
        if head == "c":
            return VertexAddress(GraphFamily.DIAMOND, AddressKind.COLLAPSED,
                                 path=tuple(int(c) for c in parts[1]), slot=parts[2])
        if head == "g":
            return VertexAddress(family, AddressKind.GENERIC, slot=parts[1])
        addr_family = GraphFamily.parse(head)
        if parts[1] == "bottom":
            return VertexAddress.bottom(addr_family)
        if parts[1] == "top":
            return VertexAddress.top(addr_family)
        return VertexAddress.derived(addr_family, int(parts[1]),
                                     tuple(int(c) for c in parts[2]), parts[3])
    except (IndexError, ValueError):
        raise UsageError(f"Malformed vertex address: {text}")


@dataclass(frozen=True, eq=False)
class MetricGraph:
    """
    A finite graph from one of the families, with exact uniform edge length.

    ``edges`` lists every edge once, oriented bottom to top for the
    recursive families, in generation order: for a recursive family of
    level n, the edge at index i has the base-b digits of i as its label
    path. ``adjacency`` is symmetric and free of loops and parallel edges.
    """

    family: GraphFamily
    level: int
    normalization: Normalization
    scale_base: int  # weighted edge length is scale_base ** -level
    edges: Tuple[Tuple[int, int], ...]
    adjacency: Tuple[Tuple[int, ...], ...]
    addresses: Tuple[VertexAddress, ...]
    name: str = ""
    _index: Dict[VertexAddress, int] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if not self._index:
            object.__setattr__(
                self, "_index", {address: vid for vid, address in enumerate(self.addresses)}
            )
        if not self.name:
            object.__setattr__(self, "name", self.default_name())

    def default_name(self) -> str:
        suffix = ":weighted" if self.normalization == Normalization.WEIGHTED else ""
        return f"{self.family.value}:{self.level}{suffix}"

    @property
    def vertex_count(self) -> int:
        return len(self.adjacency)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def edge_length(self) -> Fraction:
        """Exact length of every edge."""
        if self.normalization == Normalization.WEIGHTED:
            return Fraction(1, self.scale_base ** self.level)
        return Fraction(1)

    @property
    def bottom(self) -> int:
        """Global bottom (root of a tree, vertex 0 otherwise)."""
        return self._index.get(VertexAddress.bottom(self.family), 0)

    @property
    def top(self) -> int:
        """Global top of a recursive family graph."""
        vid = self._index.get(VertexAddress.top(self.family))
        if vid is None:
            raise VertexRangeError(f"{self.name} has no global top")
        return vid

    def length(self, hops: int) -> Fraction:
        """Exact length of a hop count."""
        return hops * self.edge_length

    def check_vertex(self, vertex: int) -> int:
        """Validate a vertex id."""
        if not isinstance(vertex, int) or not 0 <= vertex < self.vertex_count:
            raise VertexRangeError(
                f"Vertex {vertex} is not in {self.name}",
                details={"vertex": vertex, "vertex_count": self.vertex_count}
            )
        return vertex

    def neighbors(self, vertex: int) -> Tuple[int, ...]:
        return self.adjacency[vertex]

    def degree(self, vertex: int) -> int:
        return len(self.adjacency[vertex])

    def max_degree(self) -> int:
        return max((len(nbrs) for nbrs in self.adjacency), default=0)

    def address_of(self, vertex: int) -> VertexAddress:
        return self.addresses[self.check_vertex(vertex)]

    def vertex_id(self, address: VertexAddress) -> int:
        """Resolve an address to its vertex id."""
        try:
            return self._index[address]
        except KeyError:
            raise VertexRangeError(
                f"Address {address} does not occur in {self.name}",
                details={"address": str(address)}
            )

    @cached_property
    def nx_graph(self) -> nx.Graph:
        """Frozen networkx view shared by the path and cycle routines."""
        return nx.freeze(self.to_networkx())

    def to_networkx(self) -> nx.Graph:
        """Copy into a networkx Graph with integer nodes."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.vertex_count))
        graph.add_edges_from(self.edges)
        return graph

    def to_dict(self) -> dict:
        """Convert to dictionary representation."""
        return {
            "family": self.family.value,
            "level": self.level,
            "normalization": self.normalization.value,
            "vertex_count": self.vertex_count,
            "edge_count": self.edge_count,
            "edge_length": str(self.edge_length),
        }

    def __repr__(self) -> str:
        return (
            f"MetricGraph(name='{self.name}', "
            f"vertices={self.vertex_count}, "
            f"edges={self.edge_count})"
        )


@dataclass(frozen=True)
class Subdiamond:
    """
    Sub-structure of a diamond graph that evolved from one edge of D_k.

    ``root_edge_path`` has length k; the height is 2 ** (n - k) hops.
    """

    root_edge_path: Tuple[int, ...]
    height: int
    top: int
    bottom: int
    leftmost: int
    rightmost: int

    @property
    def depth(self) -> int:
        return len(self.root_edge_path)

    @property
    def corners(self) -> Tuple[int, int, int, int]:
        return (self.top, self.bottom, self.leftmost, self.rightmost)

    def contains_address(self, address: VertexAddress, top: VertexAddress,
                         bottom: VertexAddress) -> bool:
        """Membership test through addresses (top and bottom included)."""
        if address == top or address == bottom:
            return True
        return self.contains_interior(address)

    def contains_interior(self, address: VertexAddress) -> bool:
        """True for vertices strictly inside (neither top nor bottom)."""
        if address.kind != AddressKind.DERIVED:
            return False
        depth = self.depth
        return address.birth_level > depth and address.path[:depth] == self.root_edge_path

    def is_nested_in(self, other: "Subdiamond") -> bool:
        """True if this subdiamond lies inside ``other`` (or equals it)."""
        depth = other.depth
        return self.depth >= depth and self.root_edge_path[:depth] == other.root_edge_path

    def to_dict(self) -> dict:
        return {
            "root_edge_path": list(self.root_edge_path),
            "height": self.height,
            "top": self.top,
            "bottom": self.bottom,
            "leftmost": self.leftmost,
            "rightmost": self.rightmost,
        }


def build_adjacency(vertex_count: int, edges: List[Tuple[int, int]]) -> Tuple[Tuple[int, ...], ...]:
    """Symmetric adjacency lists in edge order."""
    adjacency: List[List[int]] = [[] for _ in range(vertex_count)]
    for u, v in edges:
        adjacency[u].append(v)
        adjacency[v].append(u)
    return tuple(tuple(nbrs) for nbrs in adjacency)


def new_graph(family: GraphFamily, level: int, normalization: Normalization,
              scale_base: int, addresses: List[VertexAddress],
              edges: List[Tuple[int, int]], name: str = "",
              index: Optional[Dict[VertexAddress, int]] = None) -> MetricGraph:
    """Assemble an immutable MetricGraph."""
    return MetricGraph(
        family=family,
        level=level,
        normalization=normalization,
        scale_base=scale_base,
        edges=tuple(edges),
        adjacency=build_adjacency(len(addresses), edges),
        addresses=tuple(addresses),
        name=name,
        _index=index or {},
    )
