"""Explicitly materialised finite abelian ell-groups.

Only meant for the brute-force cross-checks, so groups are kept small.
Elements are encoded as integers in mixed radix ``(ell^l1, ..., ell^lr)``;
the addition table is precomputed.
"""
from __future__ import annotations

import itertools
from functools import reduce

from .group_types import GroupType

__all__ = ["FiniteAbelianGroup", "count_automorphisms", "count_surjections"]

MAX_ELEMENTS = 5 ** 4


class FiniteAbelianGroup:
    def __init__(self, gtype: GroupType, ell: int, max_elements: int = MAX_ELEMENTS):
        self.gtype = gtype
        self.ell = ell
        self.moduli = tuple(ell ** p for p in gtype.parts)
        self.size = reduce(lambda x, y: x * y, self.moduli, 1)
        if self.size > max_elements:
            raise ValueError(f"group {gtype} of order {self.size} is too large to materialise")
        self.vectors = list(itertools.product(*(range(m) for m in self.moduli)))
        self.index = {v: k for k, v in enumerate(self.vectors)}
        self.zero = 0
        self._add = [[self.index[self._vadd(u, v)] for v in self.vectors] for u in self.vectors]

    def _vadd(self, u, v):
        return tuple((a + b) % m for a, b, m in zip(u, v, self.moduli))

    def add(self, x: int, y: int) -> int:
        return self._add[x][y]

    def multiple(self, k: int, x: int) -> int:
        v = self.vectors[x]
        return self.index[tuple((k * a) % m for a, m in zip(v, self.moduli))]

    def element_order(self, x: int) -> int:
        n, y = 1, x
        while y != self.zero:
            y = self._add[y][x]
            n += 1
        return n

    def elements(self):
        return range(self.size)

    def span(self, h: frozenset, x: int) -> frozenset:
        """Subgroup generated by the subgroup ``h`` and the element ``x``."""
        if x in h:
            return h
        out = set(h)
        add = self._add
        y = x
        while y not in h:
            out.update(add[y][z] for z in h)
            y = add[y][x]
        return frozenset(out)

    def span_of(self, gens) -> frozenset:
        h = frozenset([self.zero])
        for g in gens:
            h = self.span(h, g)
        return h

    def trivial(self) -> frozenset:
        return frozenset([self.zero])

    def whole(self) -> frozenset:
        return frozenset(range(self.size))


def _count_generating(group: FiniteAbelianGroup, choices) -> int:
    """Number of tuples ``(x_1, ..., x_n)``, ``x_t`` drawn from ``choices[t]``,
    whose span is the whole group.

    Tuples are grouped by the span of their prefix, which is all the suffix
    count depends on.  ``choices[t]`` may also carry a required prefix-span
    size used for pruning.
    """
    target = group.size
    n = len(choices)
    memo = {}

    def count(h, t):
        if t == n:
            return 1 if len(h) == target else 0
        key = (h, t)
        if key in memo:
            return memo[key]
        cands, need = choices[t]
        total = 0
        local = {}
        for x in cands:
            h2 = group.span(h, x)
            if need is not None and len(h2) != need:
                continue
            local[h2] = local.get(h2, 0) + 1
        for h2, mult in local.items():
            total += mult * count(h2, t + 1)
        memo[key] = total
        return total

    return count(group.trivial(), 0)


def count_automorphisms(gtype: GroupType, ell: int) -> int:
    """Brute-force ``|Aut A|``: tuples of images of the standard generators that
    respect the generator orders and generate ``A``."""
    group = FiniteAbelianGroup(gtype, ell)
    choices = []
    need = 1
    for p, m in zip(gtype.parts, group.moduli):
        cands = [x for x in group.elements() if group.multiple(m, x) == group.zero]
        need *= m
        choices.append((cands, need))
    return _count_generating(group, choices)


def count_surjections(i: int, gtype: GroupType, ell: int) -> int:
    """Brute-force ``|Surj(Z^i, A)|``: ``i``-tuples of elements generating ``A``."""
    group = FiniteAbelianGroup(gtype, ell)
    everything = list(group.elements())
    return _count_generating(group, [(everything, None)] * i)
