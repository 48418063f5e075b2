import threading
from fractions import Fraction

import pytest

from abelq.chains import (
    Chain,
    IntervalCache,
    enumerate_chains,
    interval,
    s_plus_value,
    s_plus_value_by_chains,
    s_value,
    s_value_by_chains,
    sigma_i,
)
from abelq.group_types import GroupType, aut_order, embeds, types_up_to
from abelq.qseries import eval_at, poch
from abelq.subgroups import sub_count

G = GroupType.of


def test_interval_examples():
    assert interval(G(), G(1, 1)) == [G(), G(1), G(1, 1)]
    assert interval(G(2), G(2)) == [G(2)]
    assert interval(G(2), G(1, 1)) == []


def test_interval_is_exact():
    ts = types_up_to(6)
    for a in ts:
        for b in ts:
            want = sorted(c for c in ts if embeds(a, c) and embeds(c, b))
            assert sorted(interval(a, b)) == want


def test_chain_validation():
    with pytest.raises(ValueError):
        Chain(G(1), (G(1, 1), G(2)))
    with pytest.raises(ValueError):
        Chain(G(1), (G(1),))
    ch = Chain(G(1), (G(2), G(3)))
    assert len(ch) == 2 and ch.top == G(3)
    assert ch.sub(3) == 1 and ch.sub_plus(3) == 1
    assert Chain(G(1)).sub(3) == 1 and Chain(G(1)).top is None


def test_s_examples():
    assert s_value(G(1), G(1), 3) == 1
    assert s_value(G(1), G(2), 3) == -1
    assert s_value(G(1), G(3), 3) == 0
    assert s_value(G(2), G(1, 1), 3) == 0


def test_s_plus_examples():
    assert s_plus_value(G(2, 1), G(2, 1), 3) == 1
    assert s_plus_value(G(1), G(2), 3) == 1
    assert s_plus_value(G(1), G(3), 3) == 2


def test_cyclic_closed_forms():
    # between (1) and (e) only cyclic types: chains are subsets of {2..e-1}
    for e in range(2, 9):
        assert s_plus_value(G(1), G(e), 3) == 2 ** (e - 2)
        assert s_value(G(1), G(e), 3) == (-1 if e == 2 else 0)


@pytest.mark.parametrize("ell", [3, 5])
def test_recursion_matches_chain_enumeration(ell):
    ts = types_up_to(4)
    for a in ts:
        for b in ts:
            assert s_value(a, b, ell) == s_value_by_chains(a, b, ell)
            assert s_plus_value(a, b, ell) == s_plus_value_by_chains(a, b, ell)


def test_last_link_grouping():
    # grouping chains by their last link instead of their first
    ell = 3
    for a in types_up_to(3):
        for b in types_up_to(4):
            if a == b or not embeds(a, b):
                continue
            rhs = -sum(s_value(a, c, ell) * sub_count(c, b, ell) for c in interval(a, b) if c != b)
            assert s_value(a, b, ell) == rhs


def test_s_plus_dominates_sub():
    for a in types_up_to(3):
        for b in types_up_to(4):
            if a != b and embeds(a, b):
                assert s_plus_value(a, b, 5) >= sub_count(a, b, 5)


def test_enumerated_chains_are_valid():
    chains = list(enumerate_chains(G(1), G(2, 1)))
    assert all(ch.top == G(2, 1) for ch in chains)
    assert len({ch.links for ch in chains}) == len(chains)


def test_cache_thread_safety():
    cache = IntervalCache()
    pairs = [(a, b) for a in types_up_to(3) for b in types_up_to(5)]
    results = [None] * 4

    def work(k):
        results[k] = [cache.s(a, b, 3) for a, b in pairs]

    threads = [threading.Thread(target=work, args=(k,)) for k in range(4)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    expected = [s_value(a, b, 3) for a, b in pairs]
    assert all(r == expected for r in results)


def test_sigma_examples():
    for e in (1, 5, 12):
        assert sigma_i(G(1), 0, 3, e) == Fraction(1, 2)
    assert sigma_i(G(1), 1, 3, 12) == Fraction(3 ** 11 - 1, 4 * 3 ** 11)
    # independent: geometric series sum_{e=2}^{12} 1/(2*3^(e-1))
    assert sigma_i(G(1), 1, 3, 12) == sum(Fraction(1, 2 * 3 ** (e - 1)) for e in range(2, 13))
    for e in (0, 3):
        assert sigma_i(G(), 1, 3, e) == 0


def test_sigma_rejects_small_e():
    with pytest.raises(ValueError):
        sigma_i(G(3), 1, 3, 2)


@pytest.mark.parametrize("a", [G(1), G(1, 1), G(2, 1)], ids=str)
def test_sigma_monotone_in_e(a):
    for i in range(3):
        values = [sigma_i(a, i, 3, e) for e in range(a.max_part, 9)]
        assert values == sorted(values)


def test_sigma_by_brute_chains():
    # length-2 chains above (1) in rank 1 are (1)<(a)<(b): sum over b of (b-2)/|Aut(b)|
    ell, e = 3, 9
    want = sum(Fraction(b - 2, aut_order(G(b), ell)) for b in range(3, e + 1))
    assert sigma_i(G(1), 2, ell, e) == want


def test_alternating_sigma_matches_converge3_limit():
    # sum_i (-1)^i sigma_i(A) -> (q)_r/|Aut A|, using a generous truncation
    a, ell, e = G(1), 5, 12
    total = sum((-1) ** i * sigma_i(a, i, ell, e) for i in range(8))
    assert abs(total - eval_at(poch(1), ell) / aut_order(a, ell)) < Fraction(1, 10 ** 5)
