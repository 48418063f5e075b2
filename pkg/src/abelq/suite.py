"""The standard verification suite: every identity over its desk-scale grid.

Each entry is ``(identity_id, params)``; running them in list order gives a
deterministic sequence of reports.
"""
from __future__ import annotations

from fractions import Fraction

from .group_types import GroupType, types_up_to
from .verifier import run_identity

ELLS = (3, 5)


def types_bounded(max_rank: int, max_part: int) -> list:
    """All types with rank ``<= max_rank`` and parts ``<= max_part``, in
    (order, parts) order."""
    return [a for a in types_up_to(max_rank * max_part, max_rank) if a.max_part <= max_part]


def square_types(max_s: int, max_part: int) -> list:
    """Types in ``G(s, s)`` (every part at least 2) with ``s <= max_s``."""
    return [a for a in types_bounded(max_s, max_part) if all(p >= 2 for p in a.parts)]


def suite_points():
    pts = []
    pts += [("q1", {"k": k}) for k in range(1, 26)]
    pts += [("qme", {"m": m, "k": k}) for m in range(21) for k in range(21)]
    for ell in ELLS:
        for a in square_types(2, 4):
            pts += [("autid", {"A": a, "i": i, "ell": ell}) for i in range(4)]
    small = types_bounded(2, 2)
    for ell in ELLS:
        for a in small:
            pts.append(("subg4", {"A": a, "ell": ell, "E": 8, "tol": Fraction(1, 1000)}))
            pts += [("subg5", {"A": a, "i": i, "ell": ell, "E": 10, "tol": Fraction(1, 100)}) for i in range(3)]
            pts.append(("converge3", {"A": a, "ell": ell, "E": 10, "tol": Fraction(1, 1000)}))
            pts.append(("converge4", {"A": a, "ell": ell, "E": 10, "tol": Fraction(1, 100)}))
    for ell in ELLS:
        for a in types_bounded(2, 3):
            r, s = a.rank, a.tower_rank(2)
            for i in range(s, r + 1):
                pts.append(("ell2", {"A": a, "i": i, "ell": ell, "E": 8, "tol": Fraction(1, 1000)}))
                pts.append(("sagain", {"A": a, "i": i, "ell": ell, "E": 8, "tol": Fraction(1, 1000)}))
    for ell in ELLS:
        pts.append(("hall", {"ell": ell, "E_sum": 12, "N_prod": 40, "tol": Fraction(1, 1000)}))
        pts += [("weight-sum", {"r": r, "ell": ell, "E": 12, "tol": Fraction(1, 1000)}) for r in range(3)]
    return pts


def run_suite(points=None) -> list:
    return [run_identity(identity_id, **params) for identity_id, params in (points or suite_points())]
