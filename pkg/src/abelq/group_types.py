"""Isomorphism types of finite abelian ell-groups, encoded as partitions.

A type ``(l1, l2, ..., lr)`` with ``l1 >= ... >= lr >= 1`` stands for the
group ``Z/ell^l1 + ... + Z/ell^lr``; the empty partition is the trivial group.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

__all__ = [
    "GroupType",
    "parse_type",
    "conjugate",
    "embeds",
    "pad_elementary",
    "aut_order",
    "surj_count",
    "weight",
    "weight_of_order",
    "partitions",
    "enumerate_types",
    "check_tower",
    "types_up_to",
    "TRIVIAL",
]


@dataclass(frozen=True, order=True)
class GroupType:
    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(sorted((int(p) for p in self.parts), reverse=True))
        if parts and parts[-1] < 1:
            raise ValueError(f"group type parts must be positive: {self.parts!r}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "GroupType":
        return cls(tuple(parts))

    @property
    def rank(self) -> int:
        return len(self.parts)

    @property
    def order_exponent(self) -> int:
        """``log_ell |A|``."""
        return sum(self.parts)

    @property
    def max_part(self) -> int:
        return self.parts[0] if self.parts else 0

    def tower_rank(self, i: int) -> int:
        """``rank_{ell^i}(A)``: the number of parts ``>= i``."""
        return sum(1 for p in self.parts if p >= i)

    def order(self, ell: int) -> int:
        return ell ** self.order_exponent

    def __str__(self):
        return ",".join(map(str, self.parts)) if self.parts else "[]"

    def __repr__(self):
        return f"GroupType({self.parts!r})"


TRIVIAL = GroupType()


def parse_type(text: str) -> GroupType:
    """Parse ``"[]"`` or a comma separated list of positive integers."""
    text = text.strip()
    if text.startswith("[") and text.endswith("]"):
        text = text[1:-1].strip()
    if not text:
        return TRIVIAL
    parts = []
    for tok in text.split(","):
        tok = tok.strip()
        try:
            p = int(tok)
        except ValueError:
            raise ValueError(f"bad part {tok!r} in group type {text!r}") from None
        if p < 1:
            raise ValueError(f"group type parts must be positive, got {p}")
        parts.append(p)
    return GroupType(tuple(parts))


def conjugate(a: GroupType) -> tuple:
    """Conjugate partition, i.e. the tower ``(rank_ell A, rank_ell^2 A, ...)``."""
    return tuple(a.tower_rank(i) for i in range(1, a.max_part + 1))


def embeds(a: GroupType, b: GroupType) -> bool:
    """Whether ``A`` is isomorphic to a subgroup of ``B``."""
    if a.rank > b.rank:
        return False
    return all(x <= y for x, y in zip(a.parts, b.parts))


def pad_elementary(a: GroupType, i: int) -> GroupType:
    """``A + (Z/ell)^i``."""
    if i < 0:
        raise ValueError("i must be nonnegative")
    return GroupType(a.parts + (1,) * i)


def _multiplicities(a: GroupType):
    out = {}
    for p in a.parts:
        out[p] = out.get(p, 0) + 1
    return out


@lru_cache(maxsize=None)
def aut_order(a: GroupType, ell: int) -> int:
    """``|Aut A|``.

    Uses ``|Aut A| = ell^(|A| + 2 n(A)) * prod_k prod_{j=1}^{m_k} (1 - ell^-j)``
    where ``n(A) = sum_i C(rank_{ell^i} A, 2)`` and ``m_k`` is the multiplicity
    of the part ``k``.  Cleared of denominators so it stays in integers.
    """
    n = sum(t * (t - 1) // 2 for t in conjugate(a))
    exponent = a.order_exponent + 2 * n
    value = 1
    for m in _multiplicities(a).values():
        for j in range(1, m + 1):
            value *= ell ** j - 1
            exponent -= j
    assert exponent >= 0
    return value * ell ** exponent


def surj_count(i: int, a: GroupType, ell: int) -> int:
    """Number of surjections ``Z^i -> A``."""
    if i < 0:
        raise ValueError("i must be nonnegative")
    r = a.rank
    if r > i:
        return 0
    # |A|^i prod_{j<r} (1 - ell^(j-i)) with the ell^(-i r) pulled out
    value = ell ** (i * (a.order_exponent - r))
    for j in range(r):
        value *= ell ** i - ell ** j
    return value


def weight(i: int, a: GroupType, ell: int) -> Fraction:
    """``w_i(A) = |Surj(Z^i, A)| / (|A|^i |Aut A|)``."""
    return Fraction(surj_count(i, a, ell), a.order(ell) ** i * aut_order(a, ell))


def weight_of_order(i: int, j: int, ell: int) -> Fraction:
    """``w_i(ell^j)``: total ``i``-weight of the types of order ``ell^j``."""
    if j < 0:
        raise ValueError("j must be nonnegative")
    return sum((weight(i, a, ell) for a in partitions(j)), Fraction(0))


def _partitions(n: int, largest: int):
    if n == 0:
        yield ()
        return
    for p in range(min(n, largest), 0, -1):
        for rest in _partitions(n - p, p):
            yield (p,) + rest


@lru_cache(maxsize=None)
def _partitions_cached(n: int) -> tuple:
    return tuple(sorted(GroupType(p) for p in _partitions(n, n)))


def partitions(n: int) -> list:
    """All group types of order ``ell^n``, sorted lexicographically on parts."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_partitions_cached(n))


def _bounded(length: int, largest: int):
    """Partitions with exactly ``length`` parts, each in ``1..largest``."""
    if length == 0:
        yield ()
        return
    for p in range(1, largest + 1):
        for rest in _bounded(length - 1, p):
            yield (p,) + rest


def check_tower(tower: Iterable[int]) -> tuple:
    tower = tuple(int(t) for t in tower)
    if not tower:
        raise ValueError("a rank tower needs at least one entry")
    if any(t < 0 for t in tower) or any(x < y for x, y in zip(tower, tower[1:])):
        raise ValueError(f"rank tower must be weakly decreasing and nonnegative: {tower}")
    return tower


def enumerate_types(tower: Sequence[int], max_exponent: int) -> list:
    """Types in ``G(r1, ..., ri)`` with all parts ``<= max_exponent``.

    Result is sorted lexicographically on parts.
    """
    tower = check_tower(tower)
    if max_exponent < 0:
        raise ValueError("max_exponent must be nonnegative")
    out = []
    for parts in _bounded(tower[0], max_exponent):
        a = GroupType(parts)
        if all(a.tower_rank(j + 1) == t for j, t in enumerate(tower)):
            out.append(a)
    return sorted(out)


def types_up_to(max_order_exponent: int, max_rank: int | None = None) -> list:
    """All types with ``|A| <= ell^max_order_exponent`` (optionally rank-bounded)."""
    out = []
    for n in range(max_order_exponent + 1):
        out.extend(a for a in partitions(n) if max_rank is None or a.rank <= max_rank)
    return out
