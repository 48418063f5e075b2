"""Chains above a group type and the chain sums built from them.

For ``A < B`` the signed sum ``S(A, B)`` adds ``(-1)^i sub(A, A1) sub(A1, A2)
... sub(A_{i-1}, B)`` over all chains ``A < A1 < ... < A_i = B``; ``S_+`` drops
the sign.  Both are computed by grouping chains on their first link, and the
explicit chain enumeration is kept as an independent check.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .group_types import GroupType, aut_order, embeds, enumerate_types, types_up_to
from .subgroups import sub_count

__all__ = [
    "Chain",
    "IntervalCache",
    "interval",
    "s_value",
    "s_plus_value",
    "enumerate_chains",
    "s_value_by_chains",
    "s_plus_value_by_chains",
    "sigma_i",
    "sigma_terms",
    "DEFAULT_CACHE",
]


@dataclass(frozen=True)
class Chain:
    base: GroupType
    links: tuple = ()

    def __post_init__(self):
        prev = self.base
        for c in self.links:
            if c == prev or not embeds(prev, c):
                raise ValueError(f"chain is not strictly increasing at {prev} -> {c}")
            prev = c

    def __len__(self):
        return len(self.links)

    @property
    def top(self):
        """Largest element, ``None`` for the empty chain."""
        return self.links[-1] if self.links else None

    def sub_plus(self, ell: int) -> int:
        value = 1
        prev = self.base
        for c in self.links:
            value *= sub_count(prev, c, ell)
            prev = c
        return value

    def sub(self, ell: int) -> int:
        return (-1) ** len(self.links) * self.sub_plus(ell)


def interval(a: GroupType, b: GroupType) -> list:
    """All types ``C`` with ``A <= C <= B``, sorted by order then parts."""
    if not embeds(a, b):
        return []
    lo = a.parts + (0,) * (b.rank - a.rank)
    out = []

    def build(j, prefix):
        if j == b.rank:
            out.append(GroupType(tuple(p for p in prefix if p)))
            return
        top = b.parts[j] if j == 0 else min(b.parts[j], prefix[-1])
        for p in range(lo[j], top + 1):
            build(j + 1, prefix + (p,))

    build(0, ())
    return sorted(out, key=lambda c: (c.order_exponent, c.parts))


class IntervalCache:
    """Memo for ``S`` and ``S_+`` keyed by ``(A, B, ell)``."""

    def __init__(self):
        self._s = {}
        self._s_plus = {}
        self._lock = threading.RLock()

    def clear(self):
        with self._lock:
            self._s.clear()
            self._s_plus.clear()

    def _get(self, table, key, compute):
        # values are deterministic, so a racing double compute is harmless
        with self._lock:
            if key in table:
                return table[key]
        value = compute()
        with self._lock:
            return table.setdefault(key, value)

    def s(self, a, b, ell):
        return self._get(self._s, (a, b, ell), lambda: _s_recursive(a, b, ell, self, signed=True))

    def s_plus(self, a, b, ell):
        return self._get(self._s_plus, (a, b, ell), lambda: _s_recursive(a, b, ell, self, signed=False))


DEFAULT_CACHE = IntervalCache()


def _s_recursive(a, b, ell, cache, signed):
    if a == b:
        return 1
    if not embeds(a, b):
        return 0
    total = 0
    for c in interval(a, b):
        if c == a:
            continue
        rest = cache.s(c, b, ell) if signed else cache.s_plus(c, b, ell)
        total += sub_count(a, c, ell) * rest
    return -total if signed else total


def s_value(a: GroupType, b: GroupType, ell: int, cache: IntervalCache | None = None) -> int:
    """Signed chain sum ``S(A, B)``."""
    return (cache or DEFAULT_CACHE).s(a, b, ell)


def s_plus_value(a: GroupType, b: GroupType, ell: int, cache: IntervalCache | None = None) -> int:
    """Unsigned chain sum ``S_+(A, B)``."""
    return (cache or DEFAULT_CACHE).s_plus(a, b, ell)


def enumerate_chains(a: GroupType, b: GroupType) -> Iterator[Chain]:
    """Every ``A``-chain whose largest element is ``B`` (the empty chain when ``A == B``)."""
    if a == b:
        yield Chain(a)
        return
    if not embeds(a, b):
        return
    # deliberately not built from interval(): this is the cross-check
    between = [
        c for c in types_up_to(b.order_exponent)
        if c != a and c != b and embeds(a, c) and embeds(c, b)
    ]

    def extend(prev, links):
        yield Chain(a, links + (b,))
        for c in between:
            if c != prev and embeds(prev, c) and (c.order_exponent > prev.order_exponent):
                yield from extend(c, links + (c,))

    yield from extend(a, ())


def s_value_by_chains(a: GroupType, b: GroupType, ell: int) -> int:
    return sum(ch.sub(ell) for ch in enumerate_chains(a, b))


def s_plus_value_by_chains(a: GroupType, b: GroupType, ell: int) -> int:
    return sum(ch.sub_plus(ell) for ch in enumerate_chains(a, b))


def sigma_i(a: GroupType, i: int, ell: int, max_exponent: int) -> Fraction:
    """Truncated ``sigma_i(A)``: ``sub_+(C) / |Aut(max C)|`` summed over the
    length-``i`` chains above ``A`` that stay in ``A``'s rank class with all
    parts ``<= max_exponent``.  The empty chain contributes ``1/|Aut A|``.
    """
    if i < 0:
        raise ValueError("i must be nonnegative")
    if max_exponent < a.max_part:
        raise ValueError(f"max_exponent {max_exponent} is below the largest part of {a}")
    return sum(sigma_terms(a, i, ell, max_exponent).values(), Fraction(0))


def sigma_terms(a: GroupType, i: int, ell: int, max_exponent: int) -> dict:
    """Contributions to truncated ``sigma_i(A)`` keyed by the chain maximum."""
    if i == 0:
        return {a: Fraction(1, aut_order(a, ell))}
    level = [c for c in enumerate_types([a.rank], max_exponent) if embeds(a, c)] if a.rank else [a]
    # weights[c] = total sub_+ of chains of the current length ending at c
    weights = {a: 1}
    for _ in range(i):
        nxt = {}
        for c in level:
            total = 0
            for d, w in weights.items():
                if d != c and embeds(d, c):
                    total += w * sub_count(d, c, ell)
            if total:
                nxt[c] = total
        weights = nxt
    return {c: Fraction(w, aut_order(c, ell)) for c, w in sorted(weights.items())}
