import itertools
from fractions import Fraction

import pytest

from abelq.finite_group import FiniteAbelianGroup, count_automorphisms, count_surjections
from abelq.group_types import (
    GroupType,
    aut_order,
    conjugate,
    embeds,
    enumerate_types,
    pad_elementary,
    parse_type,
    partitions,
    surj_count,
    types_up_to,
    weight,
    weight_of_order,
)
from abelq.qseries import eval_at, poch

G = GroupType.of


def test_parse_type():
    assert parse_type("[]") == G()
    assert parse_type("1,3,1") == G(3, 1, 1)
    assert parse_type(" 2, 1 ") == G(2, 1)
    for bad in ["2,0", "1,-1", "a", "1,,2"]:
        with pytest.raises(ValueError):
            parse_type(bad)


def test_str_round_trip():
    for a in types_up_to(6):
        assert parse_type(str(a)) == a


def test_conjugate_examples():
    assert conjugate(G(3, 1, 1)) == (3, 1, 1)
    assert conjugate(G()) == ()
    assert conjugate(G(2, 2)) == (2, 2)
    assert conjugate(G(3, 1)) == (2, 1, 1)


def test_conjugate_involution():
    for a in types_up_to(12):
        c = conjugate(a)
        assert GroupType(conjugate(GroupType(c))) == a
        assert len(c) == a.max_part
        assert all(c[i - 1] == a.tower_rank(i) for i in range(1, len(c) + 1))


def test_embeds_examples():
    assert embeds(G(1), G(2))
    assert not embeds(G(1, 1), G(3))
    assert embeds(G(2, 1), G(2, 1))


def test_embeds_is_partial_order():
    ts = types_up_to(6)
    for a in ts:
        assert embeds(a, a)
    for a, b in itertools.product(ts, repeat=2):
        if a != b and embeds(a, b):
            assert not embeds(b, a)
    for a, b, c in itertools.product(types_up_to(4), repeat=3):
        if embeds(a, b) and embeds(b, c):
            assert embeds(a, c)


def test_pad_elementary():
    assert pad_elementary(G(), 2) == G(1, 1)
    assert pad_elementary(G(2), 1) == G(2, 1)
    assert pad_elementary(G(3, 1), 0) == G(3, 1)
    a = G(3, 2)
    assert pad_elementary(a, 3).rank == a.rank + 3
    assert pad_elementary(a, 3).tower_rank(2) == a.tower_rank(2)


def test_aut_examples():
    assert aut_order(G(), 3) == 1
    assert aut_order(G(1, 1), 3) == 48 == (9 - 1) * (9 - 3)
    assert aut_order(G(2, 1), 3) == 108


def _brute_gl2(ell):
    """|GL_2(F_ell)| by testing every matrix."""
    return sum(1 for a, b, c, d in itertools.product(range(ell), repeat=4) if (a * d - b * c) % ell)


def test_aut_elementary_by_matrices():
    assert aut_order(G(1, 1), 3) == _brute_gl2(3)
    assert aut_order(G(1, 1), 5) == _brute_gl2(5)


@pytest.mark.parametrize("ell,n", [(3, 4), (5, 3)])
def test_aut_formula_matches_oracle(ell, n):
    for a in types_up_to(n):
        assert aut_order(a, ell) == count_automorphisms(a, ell), a


def test_aut_oracle_zn():
    # Aut(Z/ell^n) = units mod ell^n
    for n in range(1, 4):
        assert count_automorphisms(G(n), 3) == 2 * 3 ** (n - 1)


def test_surj_examples():
    assert surj_count(1, G(1), 3) == 2
    assert surj_count(0, G(), 3) == 1
    assert surj_count(1, G(1, 1), 3) == 0


def _literal_surjections(i, a, ell):
    grp = FiniteAbelianGroup(a, ell)
    return sum(1 for gens in itertools.product(grp.elements(), repeat=i) if len(grp.span_of(gens)) == grp.size)


@pytest.mark.parametrize("a", types_up_to(3), ids=str)
def test_surj_formula_matches_literal_brute_force(a):
    for i in range(4):
        assert surj_count(i, a, 3) == _literal_surjections(i, a, 3)


def test_surj_formula_matches_oracle_ell5():
    for a in types_up_to(3):
        for i in range(4):
            assert surj_count(i, a, 5) == count_surjections(i, a, 5)


def test_weight_examples():
    assert weight(1, G(1), 3) == Fraction(1, 3)
    assert weight(5, G(), 3) == 1
    assert weight(1, G(1, 1), 3) == 0


def test_weight_zero_iff_rank_exceeds():
    for ell in (3, 5):
        for a in types_up_to(6):
            for i in range(5):
                assert (weight(i, a, ell) == 0) == (a.rank > i)


def test_weight_of_order_examples():
    assert weight_of_order(1, 0, 3) == 1
    assert weight_of_order(1, 1, 3) == Fraction(1, 3)
    assert weight_of_order(1, 2, 3) == Fraction(1, 9)
    for j in range(10):
        assert weight_of_order(1, j, 3) == Fraction(1, 3 ** j)


@pytest.mark.parametrize("ell", [3, 5])
@pytest.mark.parametrize("r", [0, 1, 2])
def test_weight_sum_tail(ell, r):
    e = 12
    total = sum(weight_of_order(r, i, ell) for i in range(e + 1))
    assert abs(total - 1 / eval_at(poch(r), ell)) <= Fraction(10, ell ** e)


def test_enumerate_examples():
    assert enumerate_types([1], 3) == [G(1), G(2), G(3)]
    assert enumerate_types([2, 1], 2) == [G(2, 1)]
    assert sorted(partitions(3)) == [G(1, 1, 1), G(2, 1), G(3)]
    with pytest.raises(ValueError):
        enumerate_types([1, 2], 3)
    with pytest.raises(ValueError):
        enumerate_types([], 3)


def test_enumerate_is_exact_and_sorted():
    tower, e = (3, 2), 4
    got = enumerate_types(tower, e)
    want = [a for a in types_up_to(3 * e) if a.max_part <= e and a.tower_rank(1) == 3 and a.tower_rank(2) == 2]
    assert got == sorted(want) and len(set(got)) == len(got)


def test_partition_counts():
    assert [len(partitions(n)) for n in range(13)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]
