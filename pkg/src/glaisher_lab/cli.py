"""Command-line front end.

Exit codes: 0 when every checked claim passes, 1 when at least one fails,
2 for usage or parameter errors.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from itertools import product

from . import acceptance, polyexact, specfrac
from .identities import Family, FamilyParams, SumKind, finite_sum, sum_checks, symmetry_check, verify
from .identities.lemmas import verify_lemma2
from .quad import QuadConfig, Scheme
from .report import fmt17, reports_to_csv, reports_to_json

THEOREMS = {"1": Family.TH1, "2": Family.TH2, "2a": Family.TH2_GENERAL_A, "3": Family.TH3}
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _number(text: str) -> float:
    """Accepts decimals and exact fractions such as 1/2."""
    try:
        val = float(Fraction(text))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not math.isfinite(val):
        raise argparse.ArgumentTypeError(f"not finite: {text!r}")
    return val


def _exact(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _list_of(conv):
    def parse(text: str):
        items = [s for s in text.split(",") if s.strip()]
        if not items:
            raise argparse.ArgumentTypeError("empty list")
        return [conv(s.strip()) for s in items]

    return parse


def _positive_int(text: str) -> int:
    try:
        val = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if val < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {val}")
    return val


def thread_cap() -> int:
    raw = os.environ.get("GLAISHER_LAB_THREADS")
    if raw is None:
        return min(8, os.cpu_count() or 1)
    try:
        val = int(raw)
    except ValueError:
        raise UsageError(f"GLAISHER_LAB_THREADS must be a positive integer, got {raw!r}")
    if val < 1:
        raise UsageError(f"GLAISHER_LAB_THREADS must be a positive integer, got {raw!r}")
    return val


def _add_quad_flags(p):
    p.add_argument("--tol", type=_number, help="quadrature absolute and relative tolerance")
    p.add_argument("--max-evals", type=_positive_int)
    p.add_argument("--scheme", choices=[s.name for s in Scheme], type=str.upper)


def _add_format(p, machine=True):
    choices = ["text", "json", "csv"] if machine else ["text", "json"]
    p.add_argument("--format", choices=choices, default="text")


def quad_config(args) -> QuadConfig:
    kw = {}
    if getattr(args, "tol", None) is not None:
        kw["abs_tol"] = kw["rel_tol"] = args.tol
    if getattr(args, "max_evals", None) is not None:
        kw["max_evals"] = args.max_evals
    if getattr(args, "scheme", None) is not None:
        kw["scheme"] = args.scheme
    try:
        return QuadConfig(**kw)
    except ValueError as exc:
        raise UsageError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="glaisher-lab", description="Verify Glaisher-type integral identities.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("verify", help="check one identity at one parameter point")
    sel = p.add_mutually_exclusive_group(required=True)
    sel.add_argument("--theorem", choices=sorted(THEOREMS))
    sel.add_argument("--family", choices=[f.value.lower() for f in Family], type=str.lower)
    p.add_argument("--n", type=int)
    p.add_argument("--a", type=_number)
    p.add_argument("--k", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--modulus", type=_number)
    p.add_argument("--exploratory", action="store_true")
    p.add_argument("--timing", action="store_true", help="fill runtime_ms in json output")
    _add_format(p)
    _add_quad_flags(p)

    p = sub.add_parser("sweep", help="check a theorem over a parameter grid")
    p.add_argument("--theorem", choices=sorted(THEOREMS), required=True)
    p.add_argument("--n-list", type=_list_of(int), required=True)
    p.add_argument("--a-list", type=_list_of(_number))
    p.add_argument("--k-list", type=_list_of(int))
    p.add_argument("--exploratory", action="store_true")
    p.add_argument("--timing", action="store_true")
    _add_format(p)
    _add_quad_flags(p)

    p = sub.add_parser("expand", help="partial fraction expansion of a lemma")
    p.add_argument("--lemma", choices=["1", "4", "5"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=_number)
    p.add_argument("--k", type=int)
    _add_format(p, machine=False)

    p = sub.add_parser("poly", help="exact polynomial coefficients")
    p.add_argument("--kind", choices=["Q", "P", "R", "QS"], type=str.upper, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=_exact, default=Fraction(1))
    _add_format(p, machine=False)

    p = sub.add_parser("sums", help="finite trigonometric sum identities")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    _add_format(p)

    p = sub.add_parser("symmetry", help="real-axis versus imaginary-axis integrals")
    p.add_argument("--family", choices=["th1", "th3"], type=str.lower, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--timing", action="store_true")
    _add_format(p)
    _add_quad_flags(p)

    p = sub.add_parser("all", help="run the acceptance suite")
    p.add_argument("--exploratory", action="store_true")
    p.add_argument("--verbose", "-v", action="store_true")
    _add_quad_flags(p)
    return parser


def _params(family: Family, args) -> FamilyParams:
    a = args.a
    if a is None and family in (Family.TH1, Family.GLAISHER1, Family.LEMMA2):
        a = 1.0
    try:
        return FamilyParams(family, n=args.n, a=a, k=args.k, modulus=args.modulus, j=args.j)
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc))


def _emit(reports, fmt: str, timing: bool):
    if fmt == "json":
        sys.stdout.write(reports_to_json(reports, timing=timing))
    elif fmt == "csv":
        sys.stdout.write(reports_to_csv(reports))
    else:
        for r in reports:
            print(r.to_text())


def _exit_for(reports) -> int:
    gated = [r for r in reports if not r.extra.get("exploratory")]
    return EXIT_OK if all(r.passed for r in gated) else EXIT_FAIL


def _mark_exploratory(rep):
    rep.extra["exploratory"] = True
    return rep


def cmd_verify(args) -> int:
    family = THEOREMS[args.theorem] if args.theorem else Family(args.family.upper())
    params = _params(family, args)
    if params.exploratory and not args.exploratory:
        raise UsageError(f"{family} at these parameters is exploratory; pass --exploratory")
    cfg = quad_config(args)
    if family is Family.LEMMA2:
        from .specfrac import angle

        rep = verify_lemma2(params.a, angle(params.n, params.j)[0], cfg)
    else:
        rep = verify(family, params, cfg)
    if params.exploratory:
        _mark_exploratory(rep)
    _emit([rep], args.format, args.timing)
    return _exit_for([rep])


def _sweep_points(args, family):
    a_list = args.a_list or [1.0]
    k_list = args.k_list or [0]
    if family is Family.TH1:
        return [dict(n=n, a=a) for n, a in product(args.n_list, a_list)]
    if family is Family.TH2:
        return [dict(n=n) for n in args.n_list]
    if family is Family.TH2_GENERAL_A:
        return [dict(n=n, a=a) for n, a in product(args.n_list, a_list)]
    # k beyond floor(n/2) - 1 is simply absent from the grid
    return [dict(n=n, k=k) for n, k in product(args.n_list, k_list) if 0 <= k < n // 2]


def cmd_sweep(args) -> int:
    family = THEOREMS[args.theorem]
    cfg = quad_config(args)
    params = []
    for point in _sweep_points(args, family):
        try:
            p = FamilyParams(family, **point)
        except ValueError as exc:
            raise UsageError(str(exc))
        if p.exploratory and not args.exploratory:
            raise UsageError(f"n={p.n} is exploratory for {family}; pass --exploratory")
        params.append(p)
    if not params:
        raise UsageError("the parameter grid is empty")

    def run(p):
        rep = verify(family, p, cfg)
        return _mark_exploratory(rep) if p.exploratory else rep

    with ThreadPoolExecutor(max_workers=thread_cap()) as pool:
        reports = sorted(pool.map(run, params), key=lambda r: r.sort_key())
    _emit(reports, args.format, args.timing)
    return _exit_for(reports)


def _pair(z: complex) -> str:
    z = complex(z)
    return f"({fmt17(z.real)}, {fmt17(z.imag)})"


def cmd_expand(args) -> int:
    try:
        if args.lemma == "1":
            exp = specfrac.expansion_lemma1(args.n, 1.0 if args.a is None else args.a)
        elif args.lemma == "4":
            exp = specfrac.expansion_lemma4(args.n, 1.0 if args.a is None else args.a)
        else:
            exp = specfrac.expansion_lemma5(args.n, 0 if args.k is None else args.k)
    except ValueError as exc:
        raise UsageError(str(exc))
    if args.format == "json":
        doc = {
            "family": exp.family,
            "params": {k: v for k, v in exp.params.items()},
            "constant": [complex(exp.constant).real, complex(exp.constant).imag],
            "terms": [
                {"pole": [complex(t.pole).real, complex(t.pole).imag],
                 "residue": [complex(t.residue).real, complex(t.residue).imag]}
                for t in exp.terms
            ],
            "notes": list(exp.notes),
        }
        print(json.dumps(doc, default=str))
    else:
        print(f"constant {_pair(exp.constant)}")
        for t in exp.terms:
            print(f"pole {_pair(t.pole)} residue {_pair(t.residue)}")
        for note in exp.notes:
            print(f"# {note}")
    return EXIT_OK


def cmd_poly(args) -> int:
    constant = None
    try:
        if args.kind == "Q":
            poly = polyexact.build_Q_lemma1(args.n, args.a)
        elif args.kind == "P":
            poly = polyexact.build_P_lemma1(args.n, args.a)
        elif args.kind == "R":
            constant, poly = polyexact.build_R_lemma4(args.n, args.a)
        else:
            poly = polyexact.build_Q_scaled(args.n)
    except ValueError as exc:
        raise UsageError(str(exc))
    coeffs = poly.to_strings()
    if args.format == "json":
        doc = {"kind": args.kind, "n": args.n, "a": str(args.a), "variable": poly.variable.name, "coefficients": coeffs}
        if constant is not None:
            doc["constant"] = f"{constant.numerator}/{constant.denominator}"
        print(json.dumps(doc))
    else:
        if constant is not None:
            print(f"constant {constant.numerator}/{constant.denominator}")
        print(" ".join(coeffs))
    return EXIT_OK


SUM_TOL = 1e-12


def cmd_sums(args) -> int:
    if args.n < 1:
        raise UsageError(f"n must be positive, got {args.n}")
    rows = [(kind.value, val, exp) for kind, val, exp in sum_checks(args.n)]
    if args.k is not None:
        try:
            rows.append((f"{SumKind.TH3_SUM.value}[k={args.k}]", finite_sum(SumKind.TH3_SUM, args.n, args.k), None))
        except ValueError as exc:
            raise UsageError(str(exc))
    ok = all(exp is None or abs(val - exp) <= SUM_TOL for _, val, exp in rows)
    if args.format == "text":
        for name, val, exp in rows:
            if exp is None:
                print(f"{name} = {val:.10g}")
            else:
                status = "PASS" if abs(val - exp) <= SUM_TOL else "FAIL"
                print(f"[{status}] {name} = {val:.10g} (expected {exp:.10g}, err {abs(val - exp):.3g})")
    elif args.format == "json":
        for name, val, exp in rows:
            rec = {"kind": name, "n": args.n, "value": val, "expected": exp,
                   "pass": exp is None or abs(val - exp) <= SUM_TOL}
            print("{" + ", ".join(
                f"{json.dumps(k)}: {fmt17(v) if isinstance(v, float) else json.dumps(v)}" for k, v in rec.items()
            ) + "}")
    else:
        print("kind,n,value,expected,pass")
        for name, val, exp in rows:
            good = exp is None or abs(val - exp) <= SUM_TOL
            print(f"{name},{args.n},{fmt17(val)},{'' if exp is None else fmt17(exp)},{'true' if good else 'false'}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_symmetry(args) -> int:
    family = "TH1_SYM" if args.family == "th1" else "TH3_SYM"
    try:
        rep = symmetry_check(family, args.n, args.k, quad_config(args))
    except ValueError as exc:
        raise UsageError(str(exc))
    rep.notes.append(f"(pi/n) * real-axis integral = {rep.extra['scaled_real']:.17g}")
    rep.notes.append(f"substitution factor * real-axis integral = {rep.extra['substituted_real']:.17g}")
    _emit([rep], args.format, args.timing)
    return _exit_for([rep])


def cmd_all(args) -> int:
    thread_cap()  # validate the environment even though criteria run in order
    results = acceptance.run_all(quad_config(args), exploratory=args.exploratory)
    for r in results:
        print(r.line())
        if args.verbose or not r.passed:
            for d in r.details:
                print(f"    {d}")
    return EXIT_OK if all(r.passed for r in results if r.gating) else EXIT_FAIL


COMMANDS = {
    "verify": cmd_verify, "sweep": cmd_sweep, "expand": cmd_expand, "poly": cmd_poly,
    "sums": cmd_sums, "symmetry": cmd_symmetry, "all": cmd_all,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"glaisher-lab {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
