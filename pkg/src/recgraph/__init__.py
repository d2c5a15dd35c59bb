"""Recursive graph families: generation, addressing and subdiamonds."""

from .gadgets import Gadget, gadget_for, LEFT, RIGHT
from .generator import (
    generate,
    expected_counts,
    build_generic,
    cycle_graph,
    include_lower_level,
    include_from_level,
    edge_endpoints,
    edge_endpoint_addresses,
    geodesic,
    graph_from_spec,
)
from .subdiamonds import enumerate_subdiamonds, subdiamond_at, subdiamond_members, smallest_enclosing

__all__ = [
    "Gadget",
    "gadget_for",
    "LEFT",
    "RIGHT",
    "generate",
    "expected_counts",
    "build_generic",
    "cycle_graph",
    "include_lower_level",
    "include_from_level",
    "edge_endpoints",
    "edge_endpoint_addresses",
    "geodesic",
    "graph_from_spec",
    "enumerate_subdiamonds",
    "subdiamond_at",
    "subdiamond_members",
    "smallest_enclosing",
]
