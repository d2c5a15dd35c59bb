from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from src.embed import (
    bfs_order,
    distortion_lower_bound,
    distortion_of,
    min_distortion_exact,
    min_distortion_heuristic,
)
from src.metric import hop_matrix
from src.models.embedding import SolverStatus
from src.models.graph import GraphFamily
from src.recgraph import build_generic, cycle_graph, generate
from src.utils.exact import INFINITE


@st.composite
def connected_graphs(draw, min_size=2, max_size=5):
    """A random spanning tree plus a random set of extra edges."""
    size = draw(st.integers(min_size, max_size))
    edges = {(draw(st.integers(0, v - 1)), v) for v in range(1, size)}
    extra = draw(st.sets(st.tuples(st.integers(0, size - 1), st.integers(0, size - 1)), max_size=size))
    edges |= {(min(u, v), max(u, v)) for u, v in extra if u != v}
    return build_generic(sorted(edges), size)


def naive_min_distortion(source, target):
    source_hops = hop_matrix(source).tolist()
    target_hops = hop_matrix(target).tolist()
    return min(
        distortion_of(source_hops, target_hops, assignment)
        for assignment in permutations(range(target.vertex_count), source.vertex_count)
    )


@settings(max_examples=40)
@given(connected_graphs(2, 5), connected_graphs(2, 7))
def test_exact_search_matches_enumeration(source, target):
    result = min_distortion_exact(source, target)
    if source.vertex_count > target.vertex_count:
        assert result.status == SolverStatus.INFEASIBLE_INJECTIVE
        return
    assert result.status == SolverStatus.OPTIMAL
    assert result.value == naive_min_distortion(source, target)


FAMILY_TARGETS = {
    "diamond:2": generate(GraphFamily.DIAMOND, 2),
    "m:1": generate(GraphFamily.M_VARIANT, 1),
    "laakso:1": generate(GraphFamily.LAAKSO, 1),
}


@pytest.mark.slow
@settings(max_examples=50)
@given(connected_graphs(2, 5), connected_graphs(5, 12))
def test_exact_search_matches_enumeration_on_larger_targets(source, target):
    result = min_distortion_exact(source, target)
    assert result.status == SolverStatus.OPTIMAL
    assert result.value == naive_min_distortion(source, target)


@settings(max_examples=30)
@given(connected_graphs(2, 4), st.sampled_from(sorted(FAMILY_TARGETS)))
def test_exact_search_matches_enumeration_on_family_targets(source, name):
    target = FAMILY_TARGETS[name]
    result = min_distortion_exact(source, target)
    assert result.status == SolverStatus.OPTIMAL
    assert result.value == naive_min_distortion(source, target)


@pytest.mark.parametrize("family,level,target_level", [
    (GraphFamily.DIAMOND, 1, 2),
    pytest.param(GraphFamily.LAAKSO, 1, 2, marks=pytest.mark.slow),
    (GraphFamily.M_VARIANT, 0, 1),
])
def test_family_pairs_match_enumeration(family, level, target_level):
    source = generate(family, level)
    target = generate(GraphFamily.DIAMOND, target_level)
    assert min_distortion_exact(source, target).value == naive_min_distortion(source, target)


@pytest.mark.slow
def test_l1_into_d3():
    result = min_distortion_exact(generate(GraphFamily.LAAKSO, 1), generate(GraphFamily.DIAMOND, 3))
    assert result.status == SolverStatus.OPTIMAL
    assert result.value == 1


def test_disconnected_target_without_room_for_the_source():
    source = build_generic([(0, 1), (1, 2)])
    target = build_generic([(0, 1), (2, 3)])
    result = min_distortion_exact(source, target)
    assert result.status == SolverStatus.OPTIMAL
    assert result.value is INFINITE
    assert result.witness is None
    assert result.certificate.exhausted
    assert naive_min_distortion(source, target) is INFINITE


@pytest.mark.parametrize("source,target", [
    (cycle_graph(5), generate(GraphFamily.DIAMOND, 2)),
    (generate(GraphFamily.LAAKSO, 1), generate(GraphFamily.DIAMOND, 2)),
    (generate(GraphFamily.DIAMOND, 1), generate(GraphFamily.LAAKSO, 1)),
    (cycle_graph(6), generate(GraphFamily.M_VARIANT, 1)),
])
def test_bound_chain_on_family_pairs(source, target):
    exact = min_distortion_exact(source, target)
    upper = min_distortion_heuristic(source, target, seed=2, iterations=300, restarts=2)
    lower = distortion_lower_bound(source, target, subset_size=3, samples=10)
    assert exact.status == SolverStatus.OPTIMAL
    assert lower.value <= exact.value <= upper.value


@pytest.mark.slow
def test_l2_into_d4_heuristic_stays_above_the_subset_bound():
    source, target = generate(GraphFamily.LAAKSO, 2), generate(GraphFamily.DIAMOND, 4)
    upper = min_distortion_heuristic(source, target, seed=4, iterations=300, restarts=2)
    lower = distortion_lower_bound(source, target, subset_size=3, samples=4)
    assert 1 <= lower.value <= upper.value


def test_bfs_order_starts_at_an_eccentric_vertex():
    star = hop_matrix(build_generic([(0, 1), (0, 2), (0, 3)])).tolist()
    assert bfs_order(star) == [1, 0, 2, 3]
    path = hop_matrix(build_generic([(0, 1), (1, 2), (2, 3)])).tolist()
    assert bfs_order(path) == [0, 1, 2, 3]
    # subset metrics without distance-1 pairs keep the remaining ids in order
    assert bfs_order([[0, 2, 4], [2, 0, 2], [4, 2, 0]]) == [0, 1, 2]
    assert bfs_order([]) == []
