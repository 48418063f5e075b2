"""Counting subgroups of a given type, by formula and by exhaustive census."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .finite_group import FiniteAbelianGroup
from .group_types import GroupType, conjugate, embeds
from .qseries import eval_at, gauss_binomial

__all__ = ["sub_count", "subgroup_census", "type_of_subgroup", "all_subgroups", "CensusTooLarge"]


class CensusTooLarge(ValueError):
    """The group is beyond the size the brute-force census accepts."""


def _ell_binomial(n: int, k: int, ell: int) -> int:
    # [n, k]_ell = ell^(k(n-k)) [n, k]_(1/ell)
    if k < 0 or k > n:
        return 0
    value = eval_at(gauss_binomial(n, k), ell) * ell ** (k * (n - k))
    if value.denominator != 1:
        raise ArithmeticError(f"Gaussian binomial [{n},{k}] at ell={ell} is not integral: {value}")
    return value.numerator


@lru_cache(maxsize=None)
def sub_count(a: GroupType, b: GroupType, ell: int) -> int:
    """Number of subgroups of ``B`` isomorphic to ``A``.

    Product over tower levels ``i`` of
    ``ell^(a'_{i+1} (b'_i - a'_i)) * [b'_i - a'_{i+1}, a'_i - a'_{i+1}]_ell``
    with ``a'``, ``b'`` the conjugate partitions.
    """
    if not embeds(a, b):
        return 0
    ac, bc = conjugate(a), conjugate(b)
    total = 1
    for i in range(len(bc)):
        ai = ac[i] if i < len(ac) else 0
        anext = ac[i + 1] if i + 1 < len(ac) else 0
        total *= ell ** (anext * (bc[i] - ai)) * _ell_binomial(bc[i] - anext, ai - anext, ell)
    return total


def type_of_subgroup(s, group: FiniteAbelianGroup) -> GroupType:
    """Isomorphism type of the subgroup ``s`` (a set of element codes).

    ``#{x in S : ell^k x = 0} = ell^(a'_1 + ... + a'_k)`` recovers the conjugate
    partition ``a'`` level by level.
    """
    ell = group.ell
    s = set(s)
    counts = [1]
    k = 0
    while counts[-1] < len(s):
        k += 1
        counts.append(sum(1 for x in s if group.multiple(ell ** k, x) == group.zero))
    logs = []
    for c in counts:
        e, v = 0, c
        while v % ell == 0:
            v //= ell
            e += 1
        if v != 1:
            raise ValueError("torsion counts are not powers of ell; not a subgroup")
        logs.append(e)
    tower = [logs[j] - logs[j - 1] for j in range(1, len(logs))]
    if any(t <= 0 for t in tower) or any(x < y for x, y in zip(tower, tower[1:])):
        raise ValueError(f"inconsistent torsion profile {counts}; not a subgroup")
    parts = tuple(sum(1 for t in tower if t >= j) for j in range(1, (tower[0] if tower else 0) + 1))
    return GroupType(parts)


def all_subgroups(group: FiniteAbelianGroup) -> list:
    """Every subgroup exactly once, as frozensets of element codes.

    Breadth-first over spans: level ``t`` holds the subgroups generated by
    ``t`` elements.  ``t`` never needs to exceed the rank of the group.
    """
    seen = {group.trivial()}
    frontier = [group.trivial()]
    for _ in range(group.gtype.rank):
        nxt = []
        for h in frontier:
            done = set(h)
            for x in group.elements():
                if x in done:
                    continue
                h2 = group.span(h, x)
                # every y in h2 \ h gives a span inside h2; only coset reps matter
                done.update(group.add(x, z) for z in h)
                if h2 not in seen:
                    seen.add(h2)
                    nxt.append(h2)
        frontier = nxt
    return sorted(seen, key=lambda h: (len(h), sorted(h)))


def subgroup_census(b: GroupType, ell: int, max_order_exponent: int = 4, max_rank: int = 3) -> dict:
    """Map from type to the number of subgroups of ``B`` of that type, by
    exhaustive enumeration."""
    if b.order_exponent > max_order_exponent or b.rank > max_rank:
        raise CensusTooLarge(
            f"census of {b} exceeds the bound (order exponent <= {max_order_exponent}, rank <= {max_rank})"
        )
    group = FiniteAbelianGroup(b, ell, max_elements=ell ** max_order_exponent)
    census = {}
    for h in all_subgroups(group):
        t = type_of_subgroup(h, group)
        census[t] = census.get(t, 0) + 1
    return dict(sorted(census.items()))
