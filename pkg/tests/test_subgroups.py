import pytest

from abelq.finite_group import FiniteAbelianGroup
from abelq.group_types import GroupType, embeds, types_up_to
from abelq.subgroups import CensusTooLarge, all_subgroups, sub_count, subgroup_census, type_of_subgroup

G = GroupType.of


def test_sub_count_examples():
    assert sub_count(G(1), G(2), 3) == 1
    assert sub_count(G(1), G(1, 1), 3) == 4
    assert sub_count(G(2), G(1, 1), 3) == 0


def test_sub_count_lines_and_planes():
    # subspaces of F_ell^n: Gaussian binomials at ell
    assert sub_count(G(1), G(1, 1, 1), 5) == 31
    assert sub_count(G(1, 1), G(1, 1, 1), 5) == 31
    assert sub_count(G(1, 1), G(1, 1, 1, 1), 3) == 130


def test_census_examples():
    assert subgroup_census(G(1, 1), 3) == {G(): 1, G(1): 4, G(1, 1): 1}
    assert subgroup_census(G(2), 3) == {G(): 1, G(1): 1, G(2): 1}
    assert subgroup_census(G(), 7) == {G(): 1}


def test_census_bound():
    with pytest.raises(CensusTooLarge):
        subgroup_census(G(3, 2), 3)
    with pytest.raises(CensusTooLarge):
        subgroup_census(G(1, 1, 1, 1), 3)


def test_type_of_subgroup_examples():
    grp = FiniteAbelianGroup(G(2, 1), 3)
    assert type_of_subgroup(grp.trivial(), grp) == G()
    assert type_of_subgroup(grp.whole(), grp) == G(2, 1)
    s = {grp.index[v] for v in [(0, 0), (3, 0), (6, 0)]}
    assert type_of_subgroup(s, grp) == G(1)


def test_type_of_subgroup_rejects_non_subgroup():
    grp = FiniteAbelianGroup(G(1, 1), 3)
    # 2 elements, not a power of 3
    with pytest.raises(ValueError):
        type_of_subgroup({0, grp.index[(1, 0)]}, grp)


def test_subgroups_are_closed_and_distinct():
    grp = FiniteAbelianGroup(G(2, 1), 3)
    subs = all_subgroups(grp)
    assert len(set(subs)) == len(subs)
    for h in subs:
        assert all(grp.add(x, y) in h for x in h for y in h)


@pytest.mark.parametrize("ell", [3, 5])
def test_formula_matches_census(ell):
    for b in types_up_to(4, 3):
        census = subgroup_census(b, ell)
        assert sum(census.values()) == sum(sub_count(a, b, ell) for a in types_up_to(b.order_exponent))
        for a in types_up_to(4):
            assert sub_count(a, b, ell) == census.get(a, 0), (a, b)


@pytest.mark.parametrize("ell", [3, 5])
def test_embeds_iff_census_positive(ell):
    for b in types_up_to(4):
        census = subgroup_census(b, ell, max_rank=4)
        for a in types_up_to(4):
            assert embeds(a, b) == (census.get(a, 0) > 0)
            assert embeds(a, b) == (sub_count(a, b, ell) >= 1)


def test_self_and_trivial():
    for ell in (3, 5, 7):
        for b in types_up_to(8):
            assert sub_count(b, b, ell) == 1
            assert sub_count(G(), b, ell) == 1
