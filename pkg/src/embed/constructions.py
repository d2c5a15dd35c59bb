"""
Explicit isometric embeddings between family graphs.
"""

from fractions import Fraction
from typing import Dict, Optional, Tuple

from ..models.embedding import EmbeddingMap
from ..models.graph import AddressKind, GraphFamily, Normalization, VertexAddress
from ..recgraph.generator import generate
from ..utils.logger import setup_logger
from ..utils.exceptions import DomainError

logger = setup_logger(__name__)

# M gadget edge label -> path of the D_3 edge it lands on
M_EDGE_TO_D3: Dict[int, Tuple[int, int, int]] = {
    0: (0, 0, 0),
    1: (0, 0, 1),
    2: (0, 1, 0),
    3: (0, 1, 2),
    4: (0, 1, 1),
    5: (0, 1, 3),
    6: (1, 0, 0),
    7: (1, 0, 1),
    8: (1, 1, 0),
    9: (1, 1, 1),
}

# M gadget slot -> (relative birth level, relative path, slot) inside D_3
M_SLOT_TO_D3: Dict[str, Tuple[int, Tuple[int, ...], str]] = {
    "path_low": (3, (0, 0), "a"),
    "junction_low": (2, (0,), "a"),
    "mid_left": (3, (0, 1), "a"),
    "mid_right": (3, (0, 1), "b"),
    "junction_high": (1, (), "a"),
    "path_high_1": (3, (1, 0), "a"),
    "path_high_2": (2, (1,), "a"),
    "path_high_3": (3, (1, 1), "a"),
}


def m_address_to_diamond(address: VertexAddress) -> VertexAddress:
    """Image address in D_{3n} of an M_n vertex."""
    diamond = GraphFamily.DIAMOND
    if address.kind == AddressKind.ROOT_BOTTOM:
        return VertexAddress.bottom(diamond)
    if address.kind == AddressKind.ROOT_TOP:
        return VertexAddress.top(diamond)
    relative_level, relative_path, slot = M_SLOT_TO_D3[address.slot]
    prefix = tuple(label for m_label in address.path for label in M_EDGE_TO_D3[m_label])
    return VertexAddress.derived(
        diamond, 3 * (address.birth_level - 1) + relative_level, prefix + relative_path, slot
    )


def construct_m_embedding(
    n: int,
    normalization: Normalization = Normalization.UNWEIGHTED,
    max_edges: Optional[int] = None,
) -> EmbeddingMap:
    """
    Isometric map M_n -> D_{3n}.

    M_1 goes onto D_3 as: bottom path onto the bottom geodesic segment,
    central quadrilateral onto the principal cycle of the height-2
    subdiamond above it, top path onto the top geodesic segment. Each gadget
    copy of M_n lands in the D_3 copy grown from the image of its edge.

    Raises:
        DomainError: n < 0
        SizeLimitError: D_{3n} above the generation cap
    """
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    target = generate(GraphFamily.DIAMOND, 3 * n, normalization, max_edges=max_edges)
    source = generate(GraphFamily.M_VARIANT, n, normalization, max_edges=max_edges)
    assignment = tuple(target.vertex_id(m_address_to_diamond(a)) for a in source.addresses)
    logger.info(f"Constructed {source.name} -> {target.name}")
    return EmbeddingMap(source, target, assignment, scale_hint=Fraction(1))


L1_TO_D2: Dict[str, VertexAddress] = {
    "bottom": VertexAddress.derived(GraphFamily.DIAMOND, 2, (2,), "a"),
    "junction_low": VertexAddress.bottom(GraphFamily.DIAMOND),
    "mid_left": VertexAddress.derived(GraphFamily.DIAMOND, 2, (0,), "a"),
    "mid_right": VertexAddress.derived(GraphFamily.DIAMOND, 2, (0,), "b"),
    "junction_high": VertexAddress.derived(GraphFamily.DIAMOND, 1, (), "a"),
    "top": VertexAddress.derived(GraphFamily.DIAMOND, 2, (1,), "a"),
}


def construct_l1_to_d2(normalization: Normalization = Normalization.UNWEIGHTED) -> EmbeddingMap:
    """
    Distortion 1 map L_1 -> D_2.

    The quadrilateral of L_1 goes onto the principal cycle of one bottom
    height-2 subdiamond, L_1's bottom onto a neighbour of D_2's bottom in
    the other bottom subdiamond, and L_1's top one step above the
    quadrilateral's top.
    """
    source = generate(GraphFamily.LAAKSO, 1, normalization)
    target = generate(GraphFamily.DIAMOND, 2, normalization)
    images = []
    for address in source.addresses:
        if address.kind == AddressKind.ROOT_BOTTOM:
            key = "bottom"
        elif address.kind == AddressKind.ROOT_TOP:
            key = "top"
        else:
            key = address.slot
        images.append(target.vertex_id(L1_TO_D2[key]))
    return EmbeddingMap(source, target, tuple(images), scale_hint=Fraction(1))
