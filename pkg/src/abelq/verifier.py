"""Left- and right-hand sides of the identities, checked exactly or under
truncation.

Truncated identities sum over group types with every part ``<= E`` and record
the partial sum at each truncation level, so the convergence trajectory is
part of the report.  Everything is an exact rational; q-series identities are
checked as Laurent polynomials.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Union

from .chains import s_plus_value, s_value, sigma_terms
from .group_types import (
    GroupType,
    aut_order,
    embeds,
    enumerate_types,
    pad_elementary,
    partitions,
    weight_of_order,
)
from .qseries import LaurentPoly, eval_at, gauss_binomial, poch, prime_ell, q1_sum, qme_sum
from .subgroups import sub_count

log = logging.getLogger(__name__)

DEFAULT_TOL = Fraction(1, 1000)
DEFAULT_E = 8
MAX_SIGMA_LENGTH = 3

Value = Union[Fraction, LaurentPoly]


@dataclass
class VerificationReport:
    identity_id: str
    params: dict
    truncation_levels: list
    lhs_partials: list
    rhs: Value | None
    abs_error: Fraction | None
    tolerance: Fraction
    passed: bool

    @property
    def lhs(self):
        return self.lhs_partials[-1] if self.lhs_partials else None


@dataclass(frozen=True)
class IdentityInfo:
    identity_id: str
    params: tuple
    mode: str  # "exact", "symbolic" or "truncated"
    check: Callable = field(repr=False)
    proved: bool = True
    summary: str = ""


def _check_e(e: int, lo: int, what: str):
    if e < lo:
        raise ValueError(f"truncation E={e} is below {lo} needed for {what}")


def _truncated(identity_id, params, terms, lo, e_max, rhs, tol) -> VerificationReport:
    """Partial sums of ``terms`` (pairs ``(B, value)``) over ``max_part(B) <= e``
    for ``e = lo .. e_max``."""
    levels = list(range(lo, e_max + 1))
    by_level = {e: Fraction(0) for e in levels}
    for b, v in terms:
        by_level[max(b.max_part, lo)] += v
    partials = []
    running = Fraction(0)
    for e in levels:
        running += by_level[e]
        partials.append(running)
    err = abs(partials[-1] - rhs)
    return VerificationReport(identity_id, params, levels, partials, rhs, err, tol, err <= tol)


def _exact(identity_id, params, lhs, rhs, level=0) -> VerificationReport:
    err = abs(lhs - rhs)
    return VerificationReport(identity_id, params, [level], [lhs], rhs, err, Fraction(0), err == 0)


def _rank_pair(a: GroupType):
    return a.rank, a.tower_rank(2)


def _params(a=None, **kw):
    out = {}
    if a is not None:
        out["A"] = a
    out.update(kw)
    return out


def verify_subg4(a: GroupType, ell: int, e: int = DEFAULT_E, tol: Fraction = DEFAULT_TOL):
    """sum_{B in G(r)} sub(A,B)/|Aut B| = 1/((q)_r |Aut A|)."""
    ell = prime_ell(ell)
    _check_e(e, a.max_part, f"A={a}")
    r = a.rank
    terms = [(b, Fraction(sub_count(a, b, ell), aut_order(b, ell))) for b in enumerate_types([r], e)]
    rhs = 1 / (eval_at(poch(r), ell) * aut_order(a, ell))
    return _truncated("subg4", _params(a, ell=ell, E=e), terms, a.max_part, e, rhs, tol)


def verify_subg5(a: GroupType, i: int, ell: int, e: int = DEFAULT_E, tol: Fraction = DEFAULT_TOL):
    """sigma_i(A) = ((q)_r^-1 - 1)^i / |Aut A|."""
    ell = prime_ell(ell)
    if not 0 <= i <= MAX_SIGMA_LENGTH:
        raise ValueError(f"chain length i={i} outside 0..{MAX_SIGMA_LENGTH}")
    _check_e(e, a.max_part, f"A={a}")
    terms = sigma_terms(a, i, ell, e).items()
    rhs = (1 / eval_at(poch(a.rank), ell) - 1) ** i / aut_order(a, ell)
    return _truncated("subg5", _params(a, i=i, ell=ell, E=e), terms, a.max_part, e, rhs, tol)


def verify_converge3(a: GroupType, ell: int, e: int = DEFAULT_E, tol: Fraction = DEFAULT_TOL):
    """sum_{B in G(r)} S(A,B)/|Aut B| = (q)_r / |Aut A|."""
    ell = prime_ell(ell)
    _check_e(e, a.max_part, f"A={a}")
    terms = [
        (b, Fraction(s_value(a, b, ell), aut_order(b, ell)))
        for b in enumerate_types([a.rank], e) if embeds(a, b)
    ]
    rhs = eval_at(poch(a.rank), ell) / aut_order(a, ell)
    return _truncated("converge3", _params(a, ell=ell, E=e), terms, a.max_part, e, rhs, tol)


def verify_converge4(a: GroupType, ell: int, e: int = DEFAULT_E, tol: Fraction = DEFAULT_TOL):
    """sum_{B in G(r)} S_+(A,B)/|Aut B| = (q)_r / ((2(q)_r - 1) |Aut A|)."""
    ell = prime_ell(ell)
    _check_e(e, a.max_part, f"A={a}")
    terms = [
        (b, Fraction(s_plus_value(a, b, ell), aut_order(b, ell)))
        for b in enumerate_types([a.rank], e) if embeds(a, b)
    ]
    p = eval_at(poch(a.rank), ell)
    rhs = p / ((2 * p - 1) * aut_order(a, ell))
    return _truncated("converge4", _params(a, ell=ell, E=e), terms, a.max_part, e, rhs, tol)


def verify_autid(a: GroupType, i: int, ell: int):
    """|Aut(A + (Z/ell)^i)| = q^(-i(2s+i)) (q)_i |Aut A| for A in G(s,s)."""
    ell = prime_ell(ell)
    s, s2 = _rank_pair(a)
    if s != s2:
        raise ValueError(f"A={a} is not in G(s,s): every part must be at least 2")
    if i < 0:
        raise ValueError("i must be nonnegative")
    lhs = Fraction(aut_order(pad_elementary(a, i), ell))
    rhs = ell ** (i * (2 * s + i)) * eval_at(poch(i), ell) * aut_order(a, ell)
    return _exact("autid", _params(a, i=i, ell=ell), lhs, rhs)


def _check_ell2_args(a, i):
    r, s = _rank_pair(a)
    if not s <= i <= r:
        raise ValueError(f"i={i} outside {{{s}, ..., {r}}} for A={a}")
    return r, s, max(a.max_part, 2 if i >= 1 else 0)


def verify_ell2(a: GroupType, i: int, ell: int, e: int = DEFAULT_E, tol: Fraction = DEFAULT_TOL):
    """sum_{B in G(r,i)} sub(A,B)/|Aut B| = [r-s, r-i]_q q^(i(i-s)) / ((q)_i |Aut A|)."""
    ell = prime_ell(ell)
    r, s, lo = _check_ell2_args(a, i)
    _check_e(e, lo, f"A={a}, i={i}")
    terms = [(b, Fraction(sub_count(a, b, ell), aut_order(b, ell))) for b in enumerate_types([r, i], e)]
    rhs = (
        eval_at(gauss_binomial(r - s, r - i), ell)
        * Fraction(1, ell ** (i * (i - s)))
        / (eval_at(poch(i), ell) * aut_order(a, ell))
    )
    return _truncated("ell2", _params(a, i=i, ell=ell, E=e), terms, lo, e, rhs, tol)


def verify_sagain(a: GroupType, i: int, ell: int, e: int = DEFAULT_E, tol: Fraction = DEFAULT_TOL):
    """sum_{B in G(r,i)} S(A,B)/|Aut B|
    = (-1)^(i-s) q^(i(i+1)/2 - s(s+1)/2) [r-s, r-i]_q (q)_s / |Aut A|."""
    ell = prime_ell(ell)
    r, s, lo = _check_ell2_args(a, i)
    _check_e(e, lo, f"A={a}, i={i}")
    terms = [
        (b, Fraction(s_value(a, b, ell), aut_order(b, ell)))
        for b in enumerate_types([r, i], e) if embeds(a, b)
    ]
    rhs = (
        (-1) ** (i - s)
        * Fraction(1, ell ** (i * (i + 1) // 2 - s * (s + 1) // 2))
        * eval_at(gauss_binomial(r - s, r - i), ell)
        * eval_at(poch(s), ell)
        / aut_order(a, ell)
    )
    return _truncated("sagain", _params(a, i=i, ell=ell, E=e), terms, lo, e, rhs, tol)


def verify_hall(ell: int, e_sum: int = 12, n_prod: int = 40, tol: Fraction = DEFAULT_TOL):
    """sum_A 1/|Aut A| = prod_{i>=1} (1 - ell^-i)^-1, both sides truncated."""
    ell = prime_ell(ell)
    if e_sum < 0 or n_prod < 0:
        raise ValueError("truncation bounds must be nonnegative")
    levels = list(range(e_sum + 1))
    partials = []
    running = Fraction(0)
    for n in levels:
        running += sum((Fraction(1, aut_order(a, ell)) for a in partitions(n)), Fraction(0))
        partials.append(running)
    rhs = Fraction(1)
    for i in range(1, n_prod + 1):
        rhs /= 1 - Fraction(1, ell ** i)
    err = abs(partials[-1] - rhs)
    return VerificationReport(
        "hall", _params(ell=ell, E_sum=e_sum, N_prod=n_prod), levels, partials, rhs, err, tol, err <= tol
    )


def verify_weight_sum(r: int, ell: int, e: int = 12, tol: Fraction = DEFAULT_TOL):
    """sum_j w_r(ell^j) = 1/(q)_r."""
    ell = prime_ell(ell)
    if r < 0 or e < 0:
        raise ValueError("r and E must be nonnegative")
    levels = list(range(e + 1))
    partials = []
    running = Fraction(0)
    for j in levels:
        running += weight_of_order(r, j, ell)
        partials.append(running)
    rhs = 1 / eval_at(poch(r), ell)
    err = abs(partials[-1] - rhs)
    return VerificationReport("weight-sum", _params(r=r, ell=ell, E=e), levels, partials, rhs, err, tol, err <= tol)


def _symbolic(identity_id, params, lhs: LaurentPoly, rhs: LaurentPoly, level):
    diff = lhs - rhs
    err = Fraction(max((abs(v) for _, v in diff), default=0))
    return VerificationReport(identity_id, params, [level], [lhs], rhs, err, Fraction(0), diff.is_zero())


def check_q1(k: int):
    """sum_{i=0}^k (-1)^i [k,i]_q q^(i(i+1)/2 - ik) = 0 as a Laurent polynomial."""
    if k < 1:
        raise ValueError("k must be positive")
    return _symbolic("q1", _params(k=k), q1_sum(k), LaurentPoly(), k)


def check_qme(m: int, k: int):
    """sum_i [m,i]_q [k,i]_q (q)_i q^((m-i)(k-i)) = 1 as a Laurent polynomial."""
    if m < 0 or k < 0:
        raise ValueError("m and k must be nonnegative")
    return _symbolic("qme", _params(m=m, k=k), qme_sum(m, k), LaurentPoly.const(1), min(m, k))


IDENTITIES = {
    ident.identity_id: ident
    for ident in [
        IdentityInfo("subg4", ("A", "ell", "E", "tol"), "truncated", verify_subg4,
                     summary="sum_{B in G(r)} sub(A,B)/|Aut B| = 1/((q)_r |Aut A|)"),
        IdentityInfo("subg5", ("A", "i", "ell", "E", "tol"), "truncated", verify_subg5,
                     summary="sigma_i(A) = ((q)_r^-1 - 1)^i / |Aut A|"),
        IdentityInfo("converge3", ("A", "ell", "E", "tol"), "truncated", verify_converge3,
                     summary="sum_{B in G(r)} S(A,B)/|Aut B| = (q)_r/|Aut A|"),
        IdentityInfo("converge4", ("A", "ell", "E", "tol"), "truncated", verify_converge4, proved=False,
                     summary="sum_{B in G(r)} S+(A,B)/|Aut B| = (q)_r/((2(q)_r - 1)|Aut A|)"),
        IdentityInfo("autid", ("A", "i", "ell"), "exact", verify_autid,
                     summary="|Aut A_{+i}| = q^(-i(2s+i)) (q)_i |Aut A|, A in G(s,s)"),
        IdentityInfo("ell2", ("A", "i", "ell", "E", "tol"), "truncated", verify_ell2,
                     summary="sum_{B in G(r,i)} sub(A,B)/|Aut B| = [r-s,r-i]_q q^(i(i-s))/((q)_i |Aut A|)"),
        IdentityInfo("sagain", ("A", "i", "ell", "E", "tol"), "truncated", verify_sagain,
                     summary="sum_{B in G(r,i)} S(A,B)/|Aut B| = (-1)^(i-s) q^(i(i+1)/2-s(s+1)/2) [r-s,r-i]_q (q)_s/|Aut A|"),
        IdentityInfo("hall", ("ell", "E_sum", "N_prod", "tol"), "truncated", verify_hall,
                     summary="sum_A 1/|Aut A| = prod_i (1 - ell^-i)^-1"),
        IdentityInfo("weight-sum", ("r", "ell", "E", "tol"), "truncated", verify_weight_sum,
                     summary="sum_j w_r(ell^j) = 1/(q)_r"),
        IdentityInfo("q1", ("k",), "symbolic", check_q1,
                     summary="sum_i (-1)^i [k,i]_q q^(i(i+1)/2 - ik) = 0"),
        IdentityInfo("qme", ("m", "k"), "symbolic", check_qme,
                     summary="sum_i [m,i]_q [k,i]_q (q)_i q^((m-i)(k-i)) = 1"),
    ]
}

_KWARG = {"A": "a", "E": "e", "E_sum": "e_sum", "N_prod": "n_prod"}


def run_identity(identity_id: str, **params) -> VerificationReport:
    """Dispatch on identity id with parameters named as in report params."""
    try:
        ident = IDENTITIES[identity_id]
    except KeyError:
        raise ValueError(f"unknown identity {identity_id!r}; choose from {sorted(IDENTITIES)}") from None
    unknown = set(params) - set(ident.params)
    if unknown:
        raise ValueError(f"{identity_id} takes no parameter(s) {sorted(unknown)}")
    kwargs = {_KWARG.get(k, k): v for k, v in params.items() if v is not None}
    return ident.check(**kwargs)


def _failed(identity_id, params, exc) -> VerificationReport:
    p = dict(params)
    tol = Fraction(p.pop("tol", None) or 0)
    p["error"] = f"{type(exc).__name__}: {exc}"
    return VerificationReport(identity_id, p, [], [], None, None, tol, False)


def sweep(identity_id: str, param_grid, ell_list=(None,), e=None, tol=None) -> list:
    """One report per (grid point, ell), in grid order then ell order.

    ``ell``, ``E`` and ``tol`` are only passed when the identity takes them.
    Per-point errors become failed reports instead of aborting the sweep.
    """
    grid = list(param_grid)
    ells = list(ell_list)
    if not grid or not ells:
        raise ValueError("sweep needs a nonempty parameter grid")
    ident = IDENTITIES.get(identity_id)
    if ident is None:
        raise ValueError(f"unknown identity {identity_id!r}")
    reports = []
    for point in grid:
        for ell in ells:
            params = dict(point)
            for name, value in (("ell", ell), ("E", e), ("tol", tol)):
                if value is not None and name in ident.params:
                    params.setdefault(name, value)
            try:
                reports.append(run_identity(identity_id, **params))
            except (ValueError, ArithmeticError) as exc:
                log.warning("%s %s failed: %s", identity_id, params, exc)
                reports.append(_failed(identity_id, params, exc))
    return reports
