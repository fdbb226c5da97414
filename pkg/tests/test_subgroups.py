import pytest

from conftest import index2_subgroup_count

from symclass import PermutationGroup, enumerate_subgroups
from symclass.errors import BudgetExceeded
from symclass.families import alt, octahedral, sym


def test_trivial_group():
    trivial = PermutationGroup(3, [])
    subs = enumerate_subgroups(trivial)
    assert len(subs) == 1
    assert subs[0].order() == 1


def test_s3_has_six_subgroups():
    subs = enumerate_subgroups(sym(3))
    assert sorted(s.order() for s in subs) == [1, 2, 2, 2, 3, 6]


def test_a4_subgroup_lattice():
    subs = enumerate_subgroups(alt(4))
    assert sorted(s.order() for s in subs) == [1, 2, 2, 2, 3, 3, 3, 3, 4, 12]


def test_octahedral_index2_count_matches_abelianization_oracle():
    group = octahedral()
    subs = enumerate_subgroups(group)
    enumerated = sum(1 for s in subs if s.order() == 24)
    assert enumerated == index2_subgroup_count(group.elements()) == 3


def test_lagrange_and_cyclic_cover():
    group = sym(4)
    subs = enumerate_subgroups(group)
    order = group.order()
    for sub in subs:
        assert order % sub.order() == 0
    cyclic_elements = set()
    for sub in subs:
        if len(sub.generators) <= 1:
            cyclic_elements.update(sub.elements())
    assert len(cyclic_elements) == order


def test_every_subgroup_is_closed_and_contained():
    group = sym(3)
    for sub in enumerate_subgroups(group):
        elements = sub.elements()
        for a in elements:
            for b in elements:
                assert a * b in set(elements)
            assert a in group


def test_deterministic_order():
    first = [s.order() for s in enumerate_subgroups(octahedral())]
    second = [s.order() for s in enumerate_subgroups(octahedral())]
    assert first == second == sorted(first)


def test_budget_cap():
    with pytest.raises(BudgetExceeded, match="low-index"):
        enumerate_subgroups(sym(6))
    with pytest.raises(BudgetExceeded):
        enumerate_subgroups(sym(4), max_order=10)
