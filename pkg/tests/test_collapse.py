import networkx as nx
import pytest

from src.cycles import collapse_subdiamonds, path_address, subdivide
from src.models.graph import AddressKind, GraphFamily, Subdiamond
from src.recgraph import enumerate_subdiamonds, subdiamond_at
from src.utils.exceptions import DomainError, FamilyError, PreconditionError


def _height_two(graph):
    return [sub for sub in enumerate_subdiamonds(graph) if sub.height == 2]


def test_single_collapse_in_d2(d2):
    quotient = collapse_subdiamonds(d2, [subdiamond_at(d2, (0,))])
    assert (quotient.graph.vertex_count, quotient.graph.edge_count) == (11, 14)
    assert quotient.graph.family == GraphFamily.GENERIC
    assert quotient.violations() == []


def test_collapse_merges_the_side_vertices(d2):
    sub = subdiamond_at(d2, (0,))
    quotient = collapse_subdiamonds(d2, [sub])
    assert quotient.projection[sub.leftmost] == quotient.projection[sub.rightmost]
    merged = quotient.graph.addresses[quotient.projection[sub.leftmost]]
    assert merged == path_address((0,), 1)
    assert merged.kind == AddressKind.COLLAPSED
    assert str(merged) == "c:0:p1"


def test_d3_collapse_is_subdivided_d2(d2, d3):
    quotient = collapse_subdiamonds(d3, _height_two(d3))
    subdivided = subdivide(d2)
    assert (quotient.graph.vertex_count, quotient.graph.edge_count) == (28, 32)
    assert nx.is_isomorphic(quotient.graph.to_networkx(), subdivided.to_networkx())

    def labelled_edges(graph):
        return {frozenset((graph.addresses[u], graph.addresses[v])) for u, v in graph.edges}

    assert labelled_edges(quotient.graph) == labelled_edges(subdivided)


def test_d3_collapse_preserves_distances_to_corners(d3):
    quotient = collapse_subdiamonds(d3, _height_two(d3))
    assert quotient.violations(samples=100, seed=7) == []


def test_collapse_keeps_normalization(d3_weighted):
    quotient = collapse_subdiamonds(d3_weighted, _height_two(d3_weighted))
    assert quotient.graph.edge_length == d3_weighted.edge_length
    assert quotient.graph.name.endswith("/collapse[16]")


def test_nested_subdiamonds_are_rejected(d3):
    outer, inner = subdiamond_at(d3, (0,)), subdiamond_at(d3, (0, 2))
    with pytest.raises(PreconditionError) as info:
        collapse_subdiamonds(d3, [outer, inner])
    assert info.value.details["pair"] == [[0], [0, 2]]


def test_collapse_needs_a_diamond(l2, d2):
    with pytest.raises(FamilyError):
        collapse_subdiamonds(l2, [])
    shallow = Subdiamond((1, 0), 1, 1, 3, 0, 0)
    with pytest.raises(DomainError):
        collapse_subdiamonds(d2, [shallow])


def test_subdivide_doubles_edges(l1):
    graph = subdivide(l1)
    assert (graph.vertex_count, graph.edge_count) == (12, 12)
    assert graph.addresses[:l1.vertex_count] == l1.addresses
