"""Exact Laurent polynomials in q, q-Pochhammer symbols and Gaussian binomials.

Everything here is integer arithmetic on sparse ``{exponent: coefficient}``
maps.  Evaluation at ``q = 1/ell`` goes through :class:`fractions.Fraction`.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache

import gmpy2

__all__ = [
    "LaurentPoly",
    "prime_ell",
    "poch",
    "q_pochhammer",
    "gauss_binomial",
    "eval_at",
    "q1_sum",
    "qme_sum",
]


def prime_ell(value) -> int:
    """Validate and return an odd prime ``ell``."""
    try:
        ell = int(value)
    except (TypeError, ValueError):
        raise ValueError(f"ell must be an integer, got {value!r}") from None
    if ell < 3 or not gmpy2.is_prime(ell):
        raise ValueError(f"ell must be an odd prime, got {ell}")
    return ell


class LaurentPoly:
    """Integer Laurent polynomial in ``q``, immutable.

    Zero coefficients are never stored, so the zero polynomial has an empty
    coefficient map and equality is plain dict equality.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for e, v in dict(coeffs).items():
                v = int(v)
                if v:
                    c[int(e)] = v
        self._c = c

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def const(cls, value: int) -> "LaurentPoly":
        return cls({0: value})

    @property
    def coeffs(self) -> dict:
        return dict(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def degree(self):
        """Top exponent, or ``None`` for the zero polynomial."""
        return max(self._c) if self._c else None

    def valuation(self):
        """Bottom exponent, or ``None`` for the zero polynomial."""
        return min(self._c) if self._c else None

    def __getitem__(self, e: int) -> int:
        return self._c.get(e, 0)

    def __iter__(self):
        return iter(sorted(self._c.items()))

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __bool__(self):
        return bool(self._c)

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return LaurentPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + v1 * v2
        return LaurentPoly(c)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are only defined for monomials; use shift()")
        result = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``q**k`` (``k`` may be negative)."""
        return LaurentPoly({e + k: v for e, v in self._c.items()})

    def divmod(self, divisor: "LaurentPoly"):
        """Long division ``self = quotient * divisor + remainder``.

        Exponents of both sides are normalised to start at zero first; the
        quotient carries the exponent offset back.  Quotient coefficients must
        be integers, so a non-unit leading coefficient that does not divide
        raises :class:`ArithmeticError`.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly(), LaurentPoly()
        shift = self.valuation() - divisor.valuation()
        num = dict(self.shift(-self.valuation())._c)
        den = divisor.shift(-divisor.valuation())._c
        dden = max(den)
        lead = den[dden]
        quot = {}
        while num:
            top = max(num)
            if top < dden:
                break
            q, r = divmod(num[top], lead)
            if r:
                raise ArithmeticError("non-integral quotient coefficient")
            quot[top - dden] = q
            for e, v in den.items():
                k = e + top - dden
                nv = num.get(k, 0) - q * v
                if nv:
                    num[k] = nv
                else:
                    num.pop(k, None)
        quotient = LaurentPoly(quot).shift(shift)
        remainder = LaurentPoly(num).shift(self.valuation())
        return quotient, remainder

    def exact_div(self, divisor: "LaurentPoly") -> "LaurentPoly":
        q, r = self.divmod(divisor)
        if r:
            raise ArithmeticError(f"inexact division: remainder {r}")
        return q

    def __str__(self):
        if not self._c:
            return "0"
        out = []
        for e, v in sorted(self._c.items()):
            sign = "-" if v < 0 else "+"
            a = abs(v)
            if e == 0:
                body = str(a)
            else:
                mono = "q" if e == 1 else f"q^{e}"
                body = mono if a == 1 else f"{a}*{mono}"
            out.append((sign, body))
        s = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"

    _TERM = re.compile(r"^([+-])(?:(\d+)\*?)?(q(?:\^(-?\d+))?)?$")

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Inverse of ``str()``, e.g. ``"1 - q - q^2 + 2*q^-3"``."""
        text = text.replace(" ", "")
        if not text:
            raise ValueError("empty polynomial string")
        if text[0] not in "+-":
            text = "+" + text
        # split before every sign that is not part of an exponent
        tokens = re.findall(r"[+-](?:[^-+^]|\^-?)*", text)
        c = {}
        for tok in tokens:
            m = cls._TERM.match(tok)
            if not m or (m.group(2) is None and m.group(3) is None):
                raise ValueError(f"bad polynomial term {tok!r} in {text!r}")
            coeff = int(m.group(2)) if m.group(2) is not None else 1
            if m.group(3) is None:
                e = 0
            else:
                e = int(m.group(4)) if m.group(4) is not None else 1
            sign = -1 if m.group(1) == "-" else 1
            c[e] = c.get(e, 0) + sign * coeff
        return cls(c)


Q = LaurentPoly.monomial(1)
ONE = LaurentPoly.const(1)


def q_pochhammer(z: LaurentPoly, i: int) -> LaurentPoly:
    """``(z; q)_i = prod_{j=0}^{i-1} (1 - q^j z)``."""
    if i < 0:
        raise ValueError("i must be nonnegative")
    out = ONE
    for j in range(i):
        out = out * (ONE - z.shift(j))
    return out


@lru_cache(maxsize=None)
def poch(i: int) -> LaurentPoly:
    """``(q)_i = prod_{j=1}^{i} (1 - q^j)``."""
    if i < 0:
        raise ValueError("i must be nonnegative")
    if i == 0:
        return ONE
    return poch(i - 1) * (ONE - LaurentPoly.monomial(i))


@lru_cache(maxsize=None)
def gauss_binomial(k: int, m: int) -> LaurentPoly:
    """Gaussian binomial ``[k choose m]_q``; zero when ``k < m``."""
    if k < 0 or m < 0:
        raise ValueError("k and m must be nonnegative")
    if m > k:
        return LaurentPoly()
    return poch(k).exact_div(poch(m) * poch(k - m))


def eval_at(p: LaurentPoly, ell: int) -> Fraction:
    """Exact value of ``p`` at ``q = 1/ell``."""
    total = Fraction(0)
    for e, v in p:
        if e >= 0:
            total += Fraction(v, ell ** e)
        else:
            total += v * ell ** (-e)
    return total


def q1_sum(k: int) -> LaurentPoly:
    """``sum_{i=0}^k (-1)^i [k,i]_q q^{i(i+1)/2 - ik}``; vanishes for k >= 1."""
    total = LaurentPoly()
    for i in range(k + 1):
        term = gauss_binomial(k, i).shift(i * (i + 1) // 2 - i * k)
        total = total - term if i % 2 else total + term
    return total


def qme_sum(m: int, k: int) -> LaurentPoly:
    """``sum_i [m,i]_q [k,i]_q (q)_i q^{(m-i)(k-i)}``; equals 1."""
    total = LaurentPoly()
    for i in range(min(m, k) + 1):
        total = total + (gauss_binomial(m, i) * gauss_binomial(k, i) * poch(i)).shift((m - i) * (k - i))
    return total
