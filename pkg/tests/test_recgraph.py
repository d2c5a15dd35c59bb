from fractions import Fraction

import pytest

from src.embed import evaluate
from src.metric import bfs_hops
from src.models.graph import (
    AddressKind,
    GraphFamily,
    Normalization,
    VertexAddress,
    parse_address,
)
from src.recgraph import (
    build_generic,
    edge_endpoint_addresses,
    enumerate_subdiamonds,
    expected_counts,
    generate,
    geodesic,
    graph_from_spec,
    include_from_level,
    include_lower_level,
    smallest_enclosing,
    subdiamond_at,
    subdiamond_members,
)
from src.recgraph.gadgets import gadget_for
from src.recgraph.generator import index_to_path
from src.utils.exceptions import DomainError, FamilyError, SizeLimitError, UsageError

RECURSIVE = (GraphFamily.DIAMOND, GraphFamily.LAAKSO, GraphFamily.M_VARIANT)


@pytest.mark.parametrize("family", RECURSIVE)
@pytest.mark.parametrize("level", [0, 1, 2, 3, 4, pytest.param(5, marks=pytest.mark.slow),
                                   pytest.param(6, marks=pytest.mark.slow)])
def test_counts_match_closed_form(family, level):
    graph = generate(family, level)
    assert (graph.vertex_count, graph.edge_count) == expected_counts(family, level)


def test_known_counts(d2, l1, m1, l3):
    assert (d2.vertex_count, d2.edge_count) == (12, 16)
    assert (l1.vertex_count, l1.edge_count) == (6, 6)
    assert (m1.vertex_count, m1.edge_count) == (10, 10)
    assert (l3.vertex_count, l3.edge_count) == (174, 216)


def test_level_zero_is_one_edge():
    graph = generate(GraphFamily.LAAKSO, 0)
    assert graph.edges == ((0, 1),)
    assert graph.addresses[0] == VertexAddress.bottom(GraphFamily.LAAKSO)


def test_graphs_are_simple(d3, l2, m1):
    for graph in (d3, l2, m1):
        keys = {(min(u, v), max(u, v)) for u, v in graph.edges}
        assert len(keys) == graph.edge_count
        assert all(u != v for u, v in graph.edges)
        for vertex, nbrs in enumerate(graph.adjacency):
            assert all(vertex in graph.adjacency[w] for w in nbrs)


def test_lower_level_vertices_keep_ids(d2, d3):
    assert d3.addresses[:d2.vertex_count] == d2.addresses


def test_edge_index_is_label_path(d3, l2):
    for graph in (d3, l2):
        base = gadget_for(graph.family).base
        for index, (u, v) in enumerate(graph.edges):
            tail, head = edge_endpoint_addresses(graph.family, index_to_path(index, graph.level, base))
            assert (graph.addresses[u], graph.addresses[v]) == (tail, head)


def test_d1_layout(d1):
    assert d1.edges == ((0, 2), (2, 1), (0, 3), (3, 1))
    assert str(d1.addresses[2]) == "d:1::a"


def test_addresses_parse_back(l2, m1):
    for graph in (l2, m1):
        for address in graph.addresses:
            assert parse_address(address.label(), graph.family) == address


def test_malformed_address():
    with pytest.raises(UsageError):
        parse_address("d:x:0:a", GraphFamily.DIAMOND)


def test_weighted_edge_lengths():
    assert generate(GraphFamily.DIAMOND, 3, Normalization.WEIGHTED).edge_length == Fraction(1, 8)
    assert generate(GraphFamily.LAAKSO, 2, Normalization.WEIGHTED).edge_length == Fraction(1, 16)
    assert generate(GraphFamily.M_VARIANT, 1, Normalization.WEIGHTED).edge_length == Fraction(1, 8)
    assert generate(GraphFamily.QUATERNARY_TREE, 2, Normalization.WEIGHTED).edge_length == 1


def test_quaternary_tree():
    tree = generate(GraphFamily.QUATERNARY_TREE, 2)
    assert (tree.vertex_count, tree.edge_count) == (21, 20)
    assert tree.addresses[0].kind == AddressKind.SEQUENCE
    assert str(tree.addresses[5]) == "q:r00"


def test_size_cap():
    with pytest.raises(SizeLimitError) as info:
        generate(GraphFamily.DIAMOND, 8, max_edges=1000)
    assert info.value.details["cap"] == 1000
    assert info.value.exit_code == 2


def test_bad_inputs():
    with pytest.raises(UsageError):
        generate("hexagon", 2)
    with pytest.raises(DomainError):
        generate(GraphFamily.DIAMOND, -1)
    with pytest.raises(UsageError):
        graph_from_spec("diamond")
    with pytest.raises(UsageError):
        graph_from_spec("diamond:2:heavy")


def test_graph_from_spec():
    graph = graph_from_spec("l:2:weighted")
    assert graph.family == GraphFamily.LAAKSO
    assert graph.name == "laakso:2:weighted"
    assert graph.edge_length == Fraction(1, 16)


def test_build_generic_rejects_loops_and_parallel_edges():
    with pytest.raises(DomainError):
        build_generic([(0, 0)])
    with pytest.raises(DomainError):
        build_generic([(0, 1), (1, 0)])


def test_weighted_inclusion_is_isometric():
    for family in RECURSIVE:
        graph = generate(family, 2, Normalization.WEIGHTED)
        report = evaluate(include_lower_level(graph))
        assert report.distortion == 1
        assert report.expansion == 1
        assert report.contraction == 1


def test_unweighted_inclusion_scales_by_gadget_diameter(l2):
    inclusion = include_lower_level(l2)
    report = evaluate(inclusion)
    assert inclusion.scale_hint == 4
    assert report.expansion == 4
    assert report.distortion == 1


def test_inclusion_composes(d3):
    direct = include_from_level(d3, 1)
    two_steps = include_from_level(generate(GraphFamily.DIAMOND, 2), 1).compose(include_lower_level(d3))
    assert direct.assignment == two_steps.assignment


def test_inclusion_needs_a_lower_level():
    with pytest.raises(DomainError):
        include_lower_level(generate(GraphFamily.DIAMOND, 0))
    with pytest.raises(FamilyError):
        include_lower_level(generate(GraphFamily.QUATERNARY_TREE, 2))


def test_geodesic_runs_bottom_to_top(d2):
    path = geodesic(d2, ())
    assert len(path) == 5
    assert path[0] == d2.bottom and path[-1] == d2.top
    assert all(b in d2.adjacency[a] for a, b in zip(path, path[1:]))


def test_subdiamond_counts(d2, d3):
    assert len(enumerate_subdiamonds(d2)) == 5
    assert len(enumerate_subdiamonds(d3)) == 21
    assert len(enumerate_subdiamonds(d3, min_height=4)) == 5
    with pytest.raises(DomainError):
        enumerate_subdiamonds(d3, min_height=3)


def test_subdiamond_corners(d2):
    whole = subdiamond_at(d2, ())
    assert whole.height == 4
    assert (whole.bottom, whole.top, whole.leftmost, whole.rightmost) == (0, 1, 2, 3)
    inner = subdiamond_at(d2, (0,))
    assert inner.height == 2
    assert len(subdiamond_members(d2, inner)) == 4
    assert smallest_enclosing(d2, list(inner.corners)) == inner


@pytest.mark.parametrize("level", [1, 2, 3, 4])
def test_subdiamond_invariants(level):
    graph = generate(GraphFamily.DIAMOND, level)
    from_top = bfs_hops(graph, graph.top)
    for sub in enumerate_subdiamonds(graph):
        up, down = bfs_hops(graph, sub.top), bfs_hops(graph, sub.bottom)
        for vertex in subdiamond_members(graph, sub):
            assert up[vertex] + down[vertex] == sub.height
        assert bfs_hops(graph, sub.leftmost)[sub.rightmost] == sub.height
        assert from_top[sub.top] < from_top[sub.bottom]


def test_subdiamonds_need_a_diamond(l2):
    with pytest.raises(FamilyError):
        enumerate_subdiamonds(l2)


@pytest.mark.slow
def test_d8_generates():
    graph = generate(GraphFamily.DIAMOND, 8)
    assert (graph.vertex_count, graph.edge_count) == expected_counts(GraphFamily.DIAMOND, 8)
