"""
Replacement gadgets for the recursive families.

Each gadget replaces an oriented edge u -> v. Gadget vertices are indexed
``u``, ``v`` and then the slots in order; gadget edges are listed in label
order and oriented bottom to top.
"""

from dataclasses import dataclass
from typing import Dict, Tuple

import networkx as nx

from ..models.graph import GraphFamily
from ..utils.exceptions import FamilyError

LEFT = "left"
RIGHT = "right"


@dataclass(frozen=True)
class Gadget:
    """An edge replacement rule."""

    family: GraphFamily
    slots: Tuple[str, ...]
    edges: Tuple[Tuple[str, str], ...]
    left_geodesic: Tuple[int, ...]
    right_geodesic: Tuple[int, ...]
    branch_swap: Dict[str, str]  # slot permutation swapping the two branches
    reversal: Dict[str, str]  # slot permutation for u <-> v, empty if not symmetric

    @property
    def base(self) -> int:
        """Number of edges, i.e. the label alphabet size."""
        return len(self.edges)

    @property
    def vertices(self) -> Tuple[str, ...]:
        return ("u", "v") + self.slots

    @property
    def diameter(self) -> int:
        return self.distance("u", "v")

    @property
    def reversible(self) -> bool:
        return bool(self.reversal)

    def geodesic_labels(self, branch: str) -> Tuple[int, ...]:
        return self.left_geodesic if branch == LEFT else self.right_geodesic

    def distance(self, a: str, b: str) -> int:
        return _GADGET_DISTANCES[self.family][a][b]

    def label_permutation(self, slot_map: Dict[str, str], flip: bool) -> Dict[int, int]:
        """
        Edge label permutation induced by a slot permutation.

        With ``flip`` the endpoints u and v are exchanged too, so every edge
        is mapped to an edge traversed in the opposite direction.
        """
        def image(name: str) -> str:
            if name == "u":
                return "v" if flip else "u"
            if name == "v":
                return "u" if flip else "v"
            return slot_map.get(name, name)

        lookup = {edge: label for label, edge in enumerate(self.edges)}
        perm = {}
        for label, (tail, head) in enumerate(self.edges):
            mapped = (image(head), image(tail)) if flip else (image(tail), image(head))
            perm[label] = lookup[mapped]
        return perm


DIAMOND_GADGET = Gadget(
    family=GraphFamily.DIAMOND,
    slots=("a", "b"),
    edges=(("u", "a"), ("a", "v"), ("u", "b"), ("b", "v")),
    left_geodesic=(0, 1),
    right_geodesic=(2, 3),
    branch_swap={"a": "b", "b": "a"},
    reversal={"a": "a", "b": "b"},
)

LAAKSO_GADGET = Gadget(
    family=GraphFamily.LAAKSO,
    slots=("junction_low", "mid_left", "mid_right", "junction_high"),
    edges=(
        ("u", "junction_low"),
        ("junction_low", "mid_left"),
        ("junction_low", "mid_right"),
        ("mid_left", "junction_high"),
        ("mid_right", "junction_high"),
        ("junction_high", "v"),
    ),
    left_geodesic=(0, 1, 3, 5),
    right_geodesic=(0, 2, 4, 5),
    branch_swap={"mid_left": "mid_right", "mid_right": "mid_left"},
    reversal={
        "junction_low": "junction_high",
        "junction_high": "junction_low",
        "mid_left": "mid_left",
        "mid_right": "mid_right",
    },
)

# bottom path of length 2, central quadrilateral, top path of length 4
M_GADGET = Gadget(
    family=GraphFamily.M_VARIANT,
    slots=(
        "path_low", "junction_low", "mid_left", "mid_right",
        "junction_high", "path_high_1", "path_high_2", "path_high_3",
    ),
    edges=(
        ("u", "path_low"),
        ("path_low", "junction_low"),
        ("junction_low", "mid_left"),
        ("junction_low", "mid_right"),
        ("mid_left", "junction_high"),
        ("mid_right", "junction_high"),
        ("junction_high", "path_high_1"),
        ("path_high_1", "path_high_2"),
        ("path_high_2", "path_high_3"),
        ("path_high_3", "v"),
    ),
    left_geodesic=(0, 1, 2, 4, 6, 7, 8, 9),
    right_geodesic=(0, 1, 3, 5, 6, 7, 8, 9),
    branch_swap={"mid_left": "mid_right", "mid_right": "mid_left"},
    reversal={},
)

GADGETS = {
    GraphFamily.DIAMOND: DIAMOND_GADGET,
    GraphFamily.LAAKSO: LAAKSO_GADGET,
    GraphFamily.M_VARIANT: M_GADGET,
}


def _all_pairs(gadget: Gadget) -> Dict[str, Dict[str, int]]:
    graph = nx.Graph()
    graph.add_nodes_from(gadget.vertices)
    graph.add_edges_from(gadget.edges)
    return {source: dict(lengths) for source, lengths in nx.all_pairs_shortest_path_length(graph)}


_GADGET_DISTANCES = {family: _all_pairs(gadget) for family, gadget in GADGETS.items()}


def gadget_for(family: GraphFamily) -> Gadget:
    """Return the gadget of a recursive family."""
    try:
        return GADGETS[family]
    except KeyError:
        raise FamilyError(
            f"Family {family.value} is not generated by edge substitution",
            details={"family": family.value}
        )
