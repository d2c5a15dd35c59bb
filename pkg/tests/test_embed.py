from fractions import Fraction

import pytest

from config.settings import SolverConfig
from src.embed import (
    automorphism_orbits,
    construct_l1_to_d2,
    construct_m_embedding,
    distortion_lower_bound,
    evaluate,
    growth_experiment,
    min_distortion_exact,
    min_distortion_heuristic,
    orbit_representatives,
    verify_certificate,
)
from src.models.embedding import EmbeddingMap, SolverStatus
from src.models.graph import Normalization
from src.recgraph import cycle_graph
from src.utils.exact import INFINITE
from src.utils.exceptions import BudgetError, ContractError, DomainError


def test_identity_is_an_isometry(d2):
    report = evaluate(EmbeddingMap(d2, d2, tuple(range(d2.vertex_count))))
    assert (report.expansion, report.contraction, report.distortion) == (1, 1, 1)
    assert report.is_scaled_isometry


def test_collisions_give_infinite_distortion(d1):
    report = evaluate(EmbeddingMap(d1, d1, (0, 0, 2, 3)))
    assert report.distortion is INFINITE
    assert report.contraction is INFINITE
    assert report.witness_contraction_pair == (0, 1)


def test_maps_must_be_total_and_in_range(d1, d2):
    with pytest.raises(ContractError):
        EmbeddingMap(d1, d2, (0, 1))
    with pytest.raises(ContractError):
        EmbeddingMap(d1, d2, (0, 1, 2, 99))
    with pytest.raises(ContractError):
        EmbeddingMap.from_mapping(d1, d2, {0: 0, 1: 1})


def test_square_into_d1(d1):
    result = min_distortion_exact(cycle_graph(4), d1)
    assert result.status == SolverStatus.OPTIMAL
    assert result.value == 1
    assert evaluate(result.witness).distortion == 1


def test_l1_does_not_fit_injectively_into_d1(l1, d1):
    result = min_distortion_exact(l1, d1)
    assert result.status == SolverStatus.INFEASIBLE_INJECTIVE
    assert result.value is INFINITE
    assert result.witness is None
    assert verify_certificate(result) == result.certificate


def test_l1_into_d2_is_isometric(l1, d2):
    result = min_distortion_exact(l1, d2)
    assert result.status == SolverStatus.OPTIMAL
    assert result.value == 1
    assert result.details["order"]


@pytest.mark.parametrize("normalization", list(Normalization))
def test_l1_construction(normalization):
    report = evaluate(construct_l1_to_d2(normalization))
    assert report.distortion == 1


@pytest.mark.parametrize("n", [0, 1, 2])
def test_m_construction_is_isometric(n):
    embedding = construct_m_embedding(n)
    assert embedding.is_injective()
    report = evaluate(embedding)
    assert (report.expansion, report.contraction, report.distortion) == (1, 1, 1)


def test_weighted_m_construction():
    report = evaluate(construct_m_embedding(1, Normalization.WEIGHTED))
    assert report.expansion == 1
    assert report.distortion == 1
    with pytest.raises(DomainError):
        construct_m_embedding(-1)


def test_bounds_bracket_the_exact_value(d2):
    hexagon = cycle_graph(6)
    exact = min_distortion_exact(hexagon, d2)
    assert exact.status == SolverStatus.OPTIMAL
    assert exact.value > 1

    upper = min_distortion_heuristic(hexagon, d2, seed=1, iterations=300, restarts=3)
    lower = distortion_lower_bound(hexagon, d2, subset_size=3, samples=10)
    assert upper.status == SolverStatus.UPPER_BOUND_ONLY
    assert lower.value <= exact.value <= upper.value
    assert evaluate(upper.witness).distortion == upper.value

    certificate = verify_certificate(exact)
    assert certificate.exhausted
    assert certificate.improving_leaves == 0


def test_heuristic_is_deterministic(l1, d2):
    first = min_distortion_heuristic(l1, d2, seed=5, iterations=200, restarts=4, workers=1)
    second = min_distortion_heuristic(l1, d2, seed=5, iterations=200, restarts=4, workers=2)
    assert first.value == second.value
    assert first.witness.assignment == second.witness.assignment
    assert first.details["seed"] == "5"


def test_heuristic_arguments(l1, d2):
    with pytest.raises(DomainError):
        min_distortion_heuristic(l1, d2, iterations=0)
    with pytest.raises(DomainError):
        min_distortion_heuristic(l1, d2, restarts=0)


def test_small_budget_gives_an_upper_bound_only(d2):
    result = min_distortion_exact(cycle_graph(6), d2, node_budget=3)
    assert result.status == SolverStatus.UPPER_BOUND_ONLY
    assert not result.certificate.exhausted
    with pytest.raises(DomainError):
        min_distortion_exact(cycle_graph(6), d2, node_budget=0)


def test_symmetry_does_not_change_the_value(d2):
    hexagon = cycle_graph(6)
    with_orbits = min_distortion_exact(hexagon, d2)
    without = min_distortion_exact(hexagon, d2, use_symmetry=False)
    assert with_orbits.value == without.value
    assert without.status == SolverStatus.OPTIMAL


def test_pairs_embed_isometrically(l1, d2):
    bound = distortion_lower_bound(l1, d2, subset_size=2, samples=100)
    assert bound.value == 1
    assert bound.subsets_checked == 15


def test_lower_bound_arguments(l2, d3):
    with pytest.raises(BudgetError) as info:
        distortion_lower_bound(l2, d3, subset_size=4, budget=1000)
    assert info.value.details["work"] == d3.vertex_count ** 4
    with pytest.raises(DomainError):
        distortion_lower_bound(l2, d3, subset_size=5)


def test_orbits(d1, l1, m1):
    assert automorphism_orbits(d1) == (0, 0, 2, 2)
    assert len(orbit_representatives(l1)) == 3
    assert len(orbit_representatives(cycle_graph(5))) == 5
    # M is not reversible: bottom and top stay apart
    orbits = automorphism_orbits(m1)
    assert orbits[m1.bottom] != orbits[m1.top]


def test_growth_table():
    config = SolverConfig(iterations=200, restarts=2)
    rows = growth_experiment(1, [2, 1], config)
    assert [(row.n, row.target_level) for row in rows] == [(1, 1), (1, 2)]
    assert rows[0].upper_bound is INFINITE and rows[0].lower_bound is INFINITE
    assert rows[1].upper_bound == rows[1].lower_bound == Fraction(1)
    assert rows[1].upper_method == "exact"
    with pytest.raises(DomainError):
        growth_experiment(0, [1], config)
    with pytest.raises(DomainError):
        growth_experiment(1, [], config)
