"""Command line front end.

Exit status: 0 when every check passed (or a computation succeeded), 1 when
some verification failed, 2 on usage or validation errors.
"""
from __future__ import annotations

import argparse
import itertools
import json
import os
import sys
from fractions import Fraction

from . import chains, group_types, qseries, subgroups
from .group_types import GroupType, enumerate_types, parse_type
from .reports import FORMATS, format_report, format_reports
from .suite import run_suite, types_bounded
from .verifier import IDENTITIES, run_identity, sweep

ELL_ENV = "ABELQ_ELL"


class UsageError(Exception):
    pass


def _fraction(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return value


def _gtype(text: str) -> GroupType:
    try:
        return parse_type(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _tower(text: str):
    try:
        return group_types.check_tower(int(t) for t in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _default_ell():
    return os.environ.get(ELL_ENV)


def _add_output(p):
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("-o", "--output", help="write here instead of standard output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="abelq", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    comp = sub.add_parser("compute", help="evaluate a single primitive")
    comp.add_argument(
        "what",
        choices=[
            "aut", "sub", "surj", "weight", "weight-order", "s", "s-plus", "sigma",
            "poch", "gauss", "conjugate", "census",
        ],
    )
    comp.add_argument("--type", type=_gtype, help="group type A, e.g. 2,1 or []")
    comp.add_argument("--of", type=_gtype, help="ambient type B for sub, s and s-plus")
    comp.add_argument("--ell", default=_default_ell())
    comp.add_argument("--i", type=int)
    comp.add_argument("--j", type=int)
    comp.add_argument("--k", type=int)
    comp.add_argument("--m", type=int)
    comp.add_argument("--max-exponent", "-E", type=int, default=8)
    _add_output(comp)

    ver = sub.add_parser("verify", help="check one identity at one parameter point")
    ver.add_argument("identity", choices=sorted(IDENTITIES))
    ver.add_argument("--type", type=_gtype)
    ver.add_argument("--ell", default=_default_ell())
    ver.add_argument("--i", type=int)
    ver.add_argument("--r", type=int)
    ver.add_argument("--k", type=int)
    ver.add_argument("--m", type=int)
    ver.add_argument("--max-exponent", "-E", type=int)
    ver.add_argument("--e-sum", type=int)
    ver.add_argument("--n-prod", type=int)
    ver.add_argument("--tol", type=_fraction)
    _add_output(ver)

    sw = sub.add_parser("sweep", help="check one identity over a parameter grid")
    sw.add_argument("identity", choices=sorted(IDENTITIES))
    sw.add_argument("--types", type=_gtype, nargs="+", help="explicit list of types A")
    sw.add_argument("--max-rank", type=int, help="with --max-part: all A of bounded rank and parts")
    sw.add_argument("--max-part", type=int)
    sw.add_argument("--ell", nargs="+", default=None)
    sw.add_argument("--i", nargs="+", help="values of i, or 'all' for every admissible i")
    sw.add_argument("--r", type=int, nargs="+")
    sw.add_argument("--k", type=int, nargs="+")
    sw.add_argument("--m", type=int, nargs="+")
    sw.add_argument("--max-exponent", "-E", type=int)
    sw.add_argument("--tol", type=_fraction)
    _add_output(sw)

    en = sub.add_parser("enumerate", help="list group types")
    grp = en.add_mutually_exclusive_group(required=True)
    grp.add_argument("--tower", type=_tower, help="rank tower r1,r2,... for G(r1,r2,...)")
    grp.add_argument("--order-exponent", type=int, help="all types of order ell^j")
    en.add_argument("--max-exponent", "-E", type=int, default=8)
    en.add_argument("--format", choices=FORMATS, default="text")
    en.add_argument("-o", "--output")

    st = sub.add_parser("suite", help="run the full standard verification suite")
    _add_output(st)
    return parser


def _need(args, *names):
    for n in names:
        if getattr(args, n) is None:
            raise UsageError(f"--{n.replace('_', '-')} is required here")


def _compute(args):
    w = args.what
    if w in ("poch", "gauss"):
        if w == "poch":
            _need(args, "i")
            p = qseries.poch(args.i)
        else:
            _need(args, "k", "m")
            p = qseries.gauss_binomial(args.k, args.m)
        out = {"polynomial": str(p)}
        if args.ell is not None:
            out["value"] = _rat(qseries.eval_at(p, qseries.prime_ell(args.ell)))
        return out
    if w == "conjugate":
        _need(args, "type")
        return {"conjugate": list(group_types.conjugate(args.type))}
    _need(args, "ell")
    ell = qseries.prime_ell(args.ell)
    if w == "aut":
        _need(args, "type")
        return group_types.aut_order(args.type, ell)
    if w == "sub":
        _need(args, "type", "of")
        return subgroups.sub_count(args.type, args.of, ell)
    if w == "surj":
        _need(args, "type", "i")
        return group_types.surj_count(args.i, args.type, ell)
    if w == "weight":
        _need(args, "type", "i")
        return _rat(group_types.weight(args.i, args.type, ell))
    if w == "weight-order":
        _need(args, "i", "j")
        return _rat(group_types.weight_of_order(args.i, args.j, ell))
    if w == "s":
        _need(args, "type", "of")
        return chains.s_value(args.type, args.of, ell)
    if w == "s-plus":
        _need(args, "type", "of")
        return chains.s_plus_value(args.type, args.of, ell)
    if w == "sigma":
        _need(args, "type", "i")
        return _rat(chains.sigma_i(args.type, args.i, ell, args.max_exponent))
    if w == "census":
        _need(args, "type")
        census = subgroups.subgroup_census(args.type, ell)
        return {str(t): n for t, n in census.items()}
    raise UsageError(f"unknown computation {w}")


def _rat(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _render_value(value, fmt) -> bytes:
    if fmt == "json":
        return (json.dumps(value, indent=2) + "\n").encode()
    if isinstance(value, dict):
        if fmt == "csv":
            return "".join(f"{k},{json.dumps(v) if isinstance(v, list) else v}\n" for k, v in value.items()).encode()
        return "".join(f"{k}: {v}\n" for k, v in value.items()).encode()
    return f"{value}\n".encode()


def _verify_params(args) -> dict:
    ident = IDENTITIES[args.identity]
    given = {
        "A": args.type,
        "i": args.i,
        "r": args.r,
        "k": args.k,
        "m": args.m,
        "ell": args.ell,
        "E": args.max_exponent,
        "E_sum": args.e_sum,
        "N_prod": args.n_prod,
        "tol": args.tol,
    }
    params = {k: v for k, v in given.items() if v is not None and k in ident.params}
    extra = [k for k, v in given.items() if v is not None and k not in ident.params and k != "ell"]
    if extra:
        raise UsageError(f"{args.identity} does not take {', '.join(extra)}")
    missing = [k for k in ident.params if k not in params and k not in ("E", "tol", "E_sum", "N_prod")]
    if missing:
        raise UsageError(f"{args.identity} needs {', '.join(missing)}")
    if "ell" in params:
        params["ell"] = qseries.prime_ell(params["ell"])
    return params


def _sweep_grid(args):
    ident = IDENTITIES[args.identity]
    types = None
    if args.types:
        types = list(args.types)
    elif args.max_rank is not None or args.max_part is not None:
        _need(args, "max_rank", "max_part")
        types = types_bounded(args.max_rank, args.max_part)
    if "A" in ident.params and types is None:
        raise UsageError("sweep needs --types or --max-rank/--max-part")
    axes = {}
    if "A" in ident.params:
        axes["A"] = types
    for name in ("r", "k", "m"):
        values = getattr(args, name)
        if name in ident.params:
            if values is None:
                raise UsageError(f"sweep over {args.identity} needs --{name}")
            axes[name] = values
    grid = [dict(zip(axes, combo)) for combo in itertools.product(*axes.values())]
    if "i" in ident.params:
        if args.i is None:
            raise UsageError(f"sweep over {args.identity} needs --i")
        expanded = []
        for point in grid:
            if args.i == ["all"]:
                a = point["A"]
                lo, hi = (a.tower_rank(2), a.rank) if args.identity in ("ell2", "sagain") else (0, 2)
                values = range(lo, hi + 1)
            else:
                try:
                    values = [int(v) for v in args.i]
                except ValueError:
                    raise UsageError("--i takes integers or 'all'") from None
            expanded += [dict(point, i=v) for v in values]
        grid = expanded
    if "ell" in ident.params:
        ells = args.ell or ([_default_ell()] if _default_ell() else None)
        if not ells:
            raise UsageError("--ell is required here")
        ells = [qseries.prime_ell(e) for e in ells]
    else:
        ells = [None]
    return grid, ells


def _write(data: bytes, path):
    if path:
        with open(path, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        if args.command == "compute":
            _write(_render_value(_compute(args), args.format), args.output)
            return 0
        if args.command == "enumerate":
            if args.tower is not None:
                types = enumerate_types(args.tower, args.max_exponent)
            else:
                types = group_types.partitions(args.order_exponent)
            if args.format == "json":
                data = (json.dumps([list(t.parts) for t in types]) + "\n").encode()
            elif args.format == "csv":
                data = "".join(f'"{t}"\n' for t in types).encode()
            else:
                data = "".join(f"{t}\n" for t in types).encode()
            _write(data, args.output)
            return 0
        if args.command == "verify":
            reports = [run_identity(args.identity, **_verify_params(args))]
        elif args.command == "sweep":
            grid, ells = _sweep_grid(args)
            reports = sweep(args.identity, grid, ells, e=args.max_exponent, tol=args.tol)
        else:
            reports = run_suite()
    except (UsageError, ValueError, subgroups.CensusTooLarge) as exc:
        print(f"abelq: error: {exc}", file=sys.stderr)
        return 2
    if args.command == "verify":
        data = format_report(reports[0], args.format)
    else:
        data = format_reports(reports, args.format)
    _write(data, args.output)
    return 0 if all(r.passed for r in reports) else 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
