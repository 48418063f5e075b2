"""Text, JSON and CSV renderings of verification reports.

Rationals are always written as ``"num/den"`` strings and Laurent polynomials
in the ``1 - q + q^-2`` notation, so no value ever passes through a float.
"""
from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .group_types import GroupType
from .qseries import LaurentPoly
from .verifier import IDENTITIES, VerificationReport

__all__ = ["format_report", "format_reports", "report_to_dict", "report_from_dict", "loads_reports", "FORMATS"]

FORMATS = ("text", "json", "csv")
FIELDS = (
    "identity_id",
    "params",
    "truncation_levels",
    "lhs_partials",
    "rhs",
    "abs_error",
    "tolerance",
    "passed",
)


def rat(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _value_out(v):
    if v is None:
        return None
    if isinstance(v, LaurentPoly):
        return str(v)
    return rat(v)


def _value_in(s):
    if s is None:
        return None
    if "/" in s:
        return Fraction(s)
    return LaurentPoly.parse(s)


def _param_out(v):
    if isinstance(v, GroupType):
        return list(v.parts)
    if isinstance(v, Fraction):
        return rat(v)
    return v


def report_to_dict(r: VerificationReport) -> dict:
    return {
        "identity_id": r.identity_id,
        "params": {k: _param_out(v) for k, v in r.params.items()},
        "truncation_levels": list(r.truncation_levels),
        "lhs_partials": [_value_out(v) for v in r.lhs_partials],
        "rhs": _value_out(r.rhs),
        "abs_error": _value_out(r.abs_error),
        "tolerance": rat(r.tolerance),
        "passed": bool(r.passed),
    }


def report_from_dict(d: dict) -> VerificationReport:
    params = {}
    for k, v in d["params"].items():
        params[k] = GroupType(tuple(v)) if k == "A" else v
    return VerificationReport(
        identity_id=d["identity_id"],
        params=params,
        truncation_levels=list(d["truncation_levels"]),
        lhs_partials=[_value_in(v) for v in d["lhs_partials"]],
        rhs=_value_in(d["rhs"]),
        abs_error=_value_in(d["abs_error"]),
        tolerance=Fraction(d["tolerance"]),
        passed=d["passed"],
    )


def loads_reports(text: str) -> list:
    data = json.loads(text)
    if isinstance(data, dict):
        data = [data]
    return [report_from_dict(d) for d in data]


def _params_text(params) -> str:
    return " ".join(f"{k}={v}" for k, v in params.items())


def _text(r: VerificationReport) -> str:
    ident = IDENTITIES.get(r.identity_id)
    head = f"[{'PASS' if r.passed else 'FAIL'}] {r.identity_id} {_params_text(r.params)}"
    lines = [head]
    if ident is not None:
        lines.append(f"  identity: {ident.summary}")
        if not ident.proved:
            lines.append("  note: stated without proof; checked numerically only")
    for level, v in zip(r.truncation_levels, r.lhs_partials):
        lines.append(f"  lhs[{level}] = {_value_out(v)}")
    lines.append(f"  rhs = {_value_out(r.rhs)}")
    lines.append(f"  abs_error = {_value_out(r.abs_error)}  (tolerance {rat(r.tolerance)})")
    return "\n".join(lines) + "\n"


def _csv(reports) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["identity_id", "params", "truncation_level", "lhs_partial", "rhs", "abs_error", "tolerance", "passed"])
    for r in reports:
        d = report_to_dict(r)
        params = json.dumps(d["params"], separators=(",", ":"))
        rows = list(zip(d["truncation_levels"], d["lhs_partials"])) or [("", "")]
        for level, v in rows:
            w.writerow([d["identity_id"], params, level, v, d["rhs"], d["abs_error"], d["tolerance"], str(d["passed"]).lower()])
    return buf.getvalue()


def format_report(r: VerificationReport, fmt: str = "text") -> bytes:
    if fmt == "json":
        return (json.dumps(report_to_dict(r), indent=2) + "\n").encode()
    return format_reports([r], fmt)


def format_reports(reports, fmt: str = "text") -> bytes:
    """Render several reports; JSON becomes an array in the given order."""
    reports = list(reports)
    if fmt == "json":
        return (json.dumps([report_to_dict(r) for r in reports], indent=2) + "\n").encode()
    if fmt == "csv":
        return _csv(reports).encode()
    if fmt == "text":
        return "".join(_text(r) for r in reports).encode()
    raise ValueError(f"unknown format {fmt!r}; choose from {FORMATS}")
