import pytest

from src.cycles import (
    QUAD_SIDES,
    canonical_cycle,
    check_isometric,
    classify_cycle,
    cycle_family,
    enumerate_simple_cycles,
    isometric_cycle,
    principal_cycle,
)
from src.models.cycles import Cycle
from src.models.graph import GraphFamily
from src.recgraph import LEFT, RIGHT, cycle_graph, enumerate_subdiamonds, generate, subdiamond_at
from src.utils.exceptions import (
    DomainError,
    EnumerationError,
    FamilyError,
    PreconditionError,
)


def test_canonical_form_is_rotation_and_reflection_invariant():
    cycle = Cycle((5, 2, 7, 3))
    assert cycle.canonical().vertices == (2, 5, 3, 7)
    assert Cycle((7, 2, 5, 3)).canonical() == cycle.canonical()


def test_d2_has_twenty_cycles(d2):
    cycles = enumerate_simple_cycles(d2)
    assert len(cycles) == 20
    assert sorted({c.hops for c in cycles}) == [4, 8]
    assert sum(1 for c in cycles if c.hops == 4) == 4


def test_every_d2_cycle_is_principal(d2):
    heights = {}
    for cycle in enumerate_simple_cycles(d2):
        sub = classify_cycle(d2, cycle)
        assert cycle.hops == 2 * sub.height
        assert set(sub.corners) <= set(cycle.vertices)
        heights[sub.height] = heights.get(sub.height, 0) + 1
    assert heights == {2: 4, 4: 16}


@pytest.mark.slow
def test_every_d3_cycle_is_principal(d3):
    cycles = enumerate_simple_cycles(d3)
    assert len(cycles) == 16 + 64 + 4096
    for cycle in cycles:
        sub = classify_cycle(d3, cycle)
        assert cycle.hops == 2 * sub.height


def test_principal_cycles(d3):
    for sub in enumerate_subdiamonds(d3):
        cycle = principal_cycle(d3, sub)
        assert cycle.hops == 2 * sub.height
        assert cycle.is_valid_in(d3)
        assert cycle.vertices[0] == sub.bottom
        assert classify_cycle(d3, cycle) == sub


def test_selectors_pick_other_geodesics(d2):
    whole = subdiamond_at(d2, ())
    found = {
        principal_cycle(d2, whole, (left,), (right,)).canonical()
        for left in (LEFT, RIGHT)
        for right in (LEFT, RIGHT)
    }
    assert len(found) == 4
    assert all(classify_cycle(d2, cycle) == whole for cycle in found)


def test_classification_rejects_non_cycles(d2, l1):
    with pytest.raises(DomainError):
        classify_cycle(d2, Cycle((0, 2, 1)))
    with pytest.raises(FamilyError):
        classify_cycle(l1, enumerate_simple_cycles(l1)[0])


def test_enumeration_cap(d2):
    with pytest.raises(EnumerationError) as info:
        enumerate_simple_cycles(d2, cap=5)
    assert info.value.details["partial_count"] > 5


def test_generic_graph_cycles():
    assert len(enumerate_simple_cycles(cycle_graph(5))) == 1


def test_laakso_isometric_cycle(l2):
    cycle = isometric_cycle(l2, 2)
    assert cycle.hops == 16
    assert cycle.is_valid_in(l2)
    assert len(cycle.vertices) * (len(cycle.vertices) - 1) // 2 == 120
    assert check_isometric(l2, cycle) == []


def test_small_isometric_cycles(l3):
    for copy in [(0, 0), (1, 3), (5, 2)]:
        cycle = isometric_cycle(l3, 1, copy)
        assert cycle.hops == 4
        assert check_isometric(l3, cycle) == []
    for copy in [(0,), (4,)]:
        cycle = isometric_cycle(l3, 2, copy)
        assert cycle.hops == 16
        assert check_isometric(l3, cycle) == []


def test_canonical_cycle(l3):
    cycle = canonical_cycle(l3)
    assert cycle.hops == 64
    assert check_isometric(l3, cycle) == []


def test_isometric_cycle_arguments(l2, d2):
    with pytest.raises(DomainError):
        isometric_cycle(l2, 0)
    with pytest.raises(DomainError):
        isometric_cycle(l2, 3)
    with pytest.raises(DomainError):
        isometric_cycle(l2, 1, (0, 0))
    with pytest.raises(FamilyError):
        isometric_cycle(d2, 1)


@pytest.mark.parametrize("n,s,t,count", [(3, 2, 1, 5), (4, 3, 1, 21), (4, 3, 2, 5)])
def test_cycle_families(n, s, t, count):
    family = cycle_family(generate(GraphFamily.LAAKSO, n), s, t)
    assert len(family.tree) == count
    assert family.violations() == []
    assert family.root.hops == 4 ** s
    for label in family.labels():
        assert family.tree[label].hops == 4 ** (s - len(label))
        assert len(family.copies[label]) == n - s + len(label)
    assert set(family.root.vertices) & set(family.canonical_cycle.vertices)


def test_children_come_from_the_quadrilateral_sides(l3):
    family = cycle_family(l3, 2, 1)
    root_copy = family.copies[()]
    sides = sorted(family.copies[(digit,)][-1] for digit in range(4))
    assert sides == sorted(QUAD_SIDES)
    assert all(family.copies[(digit,)][:-1] == root_copy for digit in range(4))


def test_family_with_equal_exponents(l3):
    family = cycle_family(l3, 2, 2)
    assert family.labels() == [()]
    assert family.violations() == []


def test_family_arguments(l3):
    with pytest.raises(DomainError):
        cycle_family(l3, 1, 2)
    with pytest.raises(DomainError):
        cycle_family(l3, 3, 1)
    with pytest.raises(PreconditionError):
        cycle_family(l3, 2, 1, root_selector=(5,))
