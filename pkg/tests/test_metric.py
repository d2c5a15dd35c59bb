import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from src.metric import (
    ball,
    bfs_hops,
    diameter,
    diameter_hops,
    distance_oracle,
    hop_matrix,
    oracle_hops,
    radius_to_hops,
    sssp,
)
from src.models.graph import GraphFamily, Normalization
from src.recgraph import build_generic, cycle_graph, gadget_for, generate
from src.utils.exceptions import DomainError, PreconditionError, VertexRangeError

D6 = generate(GraphFamily.DIAMOND, 6)
D6_BFS = {}


@pytest.mark.parametrize("level", range(6))
def test_diamond_diameter(level):
    assert diameter_hops(generate(GraphFamily.DIAMOND, level)) == 2 ** level


@pytest.mark.parametrize("level", [0, 1, 2, 3, pytest.param(4, marks=pytest.mark.slow), pytest.param(5, marks=pytest.mark.slow)])
def test_laakso_diameter(level):
    assert diameter_hops(generate(GraphFamily.LAAKSO, level)) == 4 ** level


def test_weighted_diameter_is_one(d3_weighted):
    assert diameter(d3_weighted) == 1
    assert diameter(generate(GraphFamily.M_VARIANT, 2, Normalization.WEIGHTED)) == 1


def test_tree_and_generic_diameters():
    assert diameter_hops(generate(GraphFamily.QUATERNARY_TREE, 3)) == 6
    assert diameter_hops(cycle_graph(7)) == 3
    with pytest.raises(PreconditionError):
        diameter_hops(build_generic([(0, 1), (2, 3)]))


def _assert_oracle_matches_bfs(graph):
    matrix = hop_matrix(graph)
    for u in range(graph.vertex_count):
        for v in range(graph.vertex_count):
            assert oracle_hops(graph, u, v) == matrix[u, v], (u, v)


def test_oracle_matches_bfs_on_d3(d3):
    _assert_oracle_matches_bfs(d3)


def test_oracle_matches_bfs_on_l2(l2):
    _assert_oracle_matches_bfs(l2)


def test_oracle_matches_bfs_on_m():
    _assert_oracle_matches_bfs(generate(GraphFamily.M_VARIANT, 2))


@pytest.mark.slow
def test_oracle_matches_bfs_on_l3(l3):
    _assert_oracle_matches_bfs(l3)


@given(st.integers(0, D6.vertex_count - 1), st.integers(0, D6.vertex_count - 1))
def test_oracle_matches_bfs_on_random_d6_pairs(u, v):
    if u not in D6_BFS:
        D6_BFS[u] = bfs_hops(D6, u)
    assert distance_oracle(D6, u, v).hops == D6_BFS[u][v]


def test_oracle_reports_exact_lengths(d3_weighted):
    answer = distance_oracle(d3_weighted, d3_weighted.bottom, d3_weighted.top)
    assert answer.hops == 8
    assert answer.length == 1
    assert answer.method == "hierarchical"


def test_oracle_falls_back_on_generic_graphs():
    answer = distance_oracle(cycle_graph(6), 0, 3)
    assert answer.hops == 3
    assert answer.method == "bfs-fallback"
    assert answer.note


def test_level_zero_oracle():
    graph = generate(GraphFamily.LAAKSO, 0)
    assert oracle_hops(graph, 0, 1) == 1
    assert oracle_hops(graph, 1, 1) == 0


def test_invalid_vertex(d2):
    with pytest.raises(VertexRangeError):
        distance_oracle(d2, 0, 99)
    with pytest.raises(VertexRangeError):
        sssp(d2, -1)


@given(st.integers(0, 43), st.integers(0, 43), st.integers(0, 43))
def test_distance_vectors_are_metric(u, v, w):
    graph = generate(GraphFamily.DIAMOND, 3, Normalization.WEIGHTED)
    du, dv = sssp(graph, u), sssp(graph, v)
    assert du.distance(u) == 0
    assert du.distance(v) == dv.distance(u)
    assert du.distance(w) <= du.distance(v) + dv.distance(w)


@pytest.mark.parametrize("level", list(range(2, 8)) + [pytest.param(level, marks=pytest.mark.slow) for level in (8, 9, 10)])
def test_bottom_ball_of_diamond(level):
    graph = generate(GraphFamily.DIAMOND, level)
    assert len(ball(graph, graph.bottom, 1)) == 2 ** level + 1


def test_ball_uses_exact_radius(d3_weighted):
    assert len(ball(d3_weighted, d3_weighted.bottom, Fraction(1, 8))) == 9
    assert len(ball(d3_weighted, d3_weighted.bottom, Fraction(1, 10))) == 1
    assert ball(d3_weighted, 0, 1) == tuple(range(d3_weighted.vertex_count))


def test_radius_must_be_nonnegative(d2):
    with pytest.raises(DomainError):
        radius_to_hops(d2, -1)
    with pytest.raises(DomainError):
        ball(d2, 0, Fraction(-1, 2))


@pytest.mark.slow
def test_oracle_matches_bfs_on_random_d8_pairs():
    graph = generate(GraphFamily.DIAMOND, 8)
    rng = random.Random(8)
    for _ in range(100):
        u = rng.randrange(graph.vertex_count)
        hops = bfs_hops(graph, u)
        for _ in range(100):
            v = rng.randrange(graph.vertex_count)
            assert oracle_hops(graph, u, v) == hops[v], (u, v)


@pytest.mark.parametrize("family,width", [
    (GraphFamily.DIAMOND, 2),
    (GraphFamily.LAAKSO, 4),
    (GraphFamily.M_VARIANT, 8),
])
def test_gadget_distances(family, width):
    gadget = gadget_for(family)
    assert gadget.diameter == width
    assert gadget.distance("u", "u") == 0
    for a in gadget.vertices:
        for b in gadget.vertices:
            assert gadget.distance(a, b) == gadget.distance(b, a)
            assert gadget.distance(a, b) <= width


def test_hop_matrix_is_a_graph_metric(l2):
    matrix = hop_matrix(l2)
    assert np.array_equal(matrix, matrix.T)
    assert (np.diag(matrix) == 0).all()
    for u, v in l2.edges:
        assert matrix[u, v] == 1
        assert (np.abs(matrix[u] - matrix[v]) <= 1).all()


def test_hop_cutoff_truncates_the_search(d3):
    full = bfs_hops(d3, d3.bottom)
    near = bfs_hops(d3, d3.bottom, max_hops=2)
    assert near == [h if h <= 2 else -1 for h in full]
    apart = build_generic([(0, 1), (2, 3)])
    assert bfs_hops(apart, 0) == [0, 1, -1, -1]
