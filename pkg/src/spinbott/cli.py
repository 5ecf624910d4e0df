"""Command-line front end: invariants, Bott classes, and verification reports.

All machine output is JSON (exact values as strings); human-readable
summaries derive from it.  Exit codes: 0 all good, 1 verification
failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .clifford import clifford_group_test, parse_element, spin_lift
from .config import Caps
from .lambda_bott import (LambdaVector, bott_lines, bott_virtual, format_line_expr,
                          parse_line_expr, serre_sqrt, sphere_formula,
                          bott_cyclotomic, line_to_lambda)
from .modules import adams_module_report
from .quadforms import (bw_class, discriminant, hasse_witt, is_orientable,
                        parse_form, square_free_part, INF)
from .rings import format_rational, format_truncated
from .verify import run_suite, SUITES


class UsageError(ValueError):
    pass


def _caps_from(args) -> Caps:
    return Caps(max_dim=args.max_dim, max_tensor=args.max_tensor,
                max_vars=args.max_vars, max_k=args.max_k)


def _emit(payload: dict, out: str | None) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_qf(args) -> int:
    q = parse_form(args.diag)
    orientable, witness = is_orientable(q)
    bound = args.prime_bound
    triple = bw_class(q, bound)
    payload = {
        "rank": q.rank,
        "disc": square_free_part(discriminant(q)),
        "hasse_minus": list(triple.hasse_minus),
        "orientable": orientable,
        "bw": triple.to_json(),
    }
    if witness is not None:
        payload["orientation_witness"] = format_rational(witness)
    if args.primes:
        payload["hasse"] = {str(p): hasse_witt(q, p if p == INF else int(p))
                            for p in args.primes}
    _emit(payload, args.out)
    return 0


def cmd_bott(args) -> int:
    caps = _caps_from(args)
    if args.mode == "sphere":
        if args.r is None:
            raise UsageError("mode=sphere needs --r")
        coeff = sphere_formula(args.r, args.k, caps=caps)
        _emit({"coefficient": format_rational(coeff), "r": args.r, "k": args.k,
               "ring": f"Q[x1..x{args.r}]/(xi^2)", "sign_ambiguous": False}, args.out)
        return 0
    expr = parse_line_expr(args.expr)
    if args.mode == "lines":
        if expr.is_effective():
            value = bott_lines(expr, args.k)
            payload = {"value": format_line_expr(value), "ring": "line expressions",
                       "sign_ambiguous": False}
        else:
            value = bott_virtual(expr, args.k, caps=caps)
            payload = {"value": format_truncated(value),
                       "ring": f"Q[x1..x{value.nvars}]/(xi^2)",
                       "sign_ambiguous": False, "routed": "virtual"}
        _emit(payload, args.out)
        return 0
    if args.mode == "cyclotomic":
        value = bott_cyclotomic(line_to_lambda(expr), args.k, caps=caps)
        text = value if isinstance(value, (int, Fraction)) else format_line_expr(value)
        _emit({"value": str(text), "ring": "descended from the cyclotomic extension",
               "sign_ambiguous": False}, args.out)
        return 0
    raise UsageError(f"unknown mode {args.mode!r}")


def cmd_serre_sqrt(args) -> int:
    caps = _caps_from(args)
    lams = tuple(Fraction(p.strip()) for p in args.lams.split(","))
    v = LambdaVector(len(lams), lams)
    root = serre_sqrt(v, args.k, caps=caps)
    square = bott_cyclotomic(v, args.k, caps=caps)
    payload = {
        "value": str(root.value),
        "squares_to": str(square),
        "square_checks": root.value ** 2 == square,
        "ring": "rational",
        "sign_ambiguous": root.sign_ambiguous,
    }
    _emit(payload, args.out)
    return 0


def cmd_clifford_check(args) -> int:
    caps = _caps_from(args)
    q = parse_form(args.form)
    a = parse_element(args.element, q, caps=caps)
    res = clifford_group_test(a)
    payload = {"member": res.member}
    if res.member:
        payload.update({
            "degree": res.degree,
            "norm": format_rational(res.norm),
            "in_spin": res.in_spin,
            "matrix": [[format_rational(x) for x in row]
                       for row in res.matrix.entries],
        })
    else:
        payload["reason"] = res.reason
    _emit(payload, args.out)
    return 0


def cmd_spin_lift(args) -> int:
    caps = _caps_from(args)
    q = parse_form(args.form)
    lift = spin_lift(q, args.copies, caps=caps)
    payload = {
        "form": args.form,
        "copies": args.copies,
        "lambda_sign": format_rational(lift.lambda_sign),
        "squares_ok": lift.squares_ok,
        "braid_ok": lift.braid_ok,
        "commutation_ok": lift.commutation_ok,
        "matrices_ok": lift.matrices_ok,
        "norms": [format_rational(n) for n in lift.norms],
        "in_spin": lift.in_spin,
    }
    _emit(payload, args.out)
    return 0 if lift.all_ok else 1


def cmd_adams_module(args) -> int:
    caps = _caps_from(args)
    payload = adams_module_report(args.m, args.k, caps=caps)
    _emit(payload, args.out)
    return 0 if payload["rho_k"] == payload["expected"] else 1


def cmd_verify(args) -> int:
    caps = _caps_from(args)
    report = run_suite(args.suite, seed=args.seed, caps=caps, timings=args.timings)
    _emit(report.to_json(), args.out)
    return 0 if report.all_pass else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinbott",
        description="Exact Clifford-algebra, quadratic-form and Bott-class checks.",
        allow_abbrev=False)
    parser.add_argument("--max-dim", type=int, default=12, help="blade rank cap")
    parser.add_argument("--max-tensor", type=int, default=4096, help="tensor dimension cap")
    parser.add_argument("--max-vars", type=int, default=8, help="truncated variable cap")
    parser.add_argument("--max-k", type=int, default=32, help="cyclotomic order cap")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("qf", help="invariants of a diagonal quadratic form")
    p.add_argument("diag", help="comma-separated rationals, e.g. 1,-1,2/3")
    p.add_argument("--prime-bound", type=int, default=50)
    p.add_argument("--primes", nargs="*", help="report Hasse symbols at these places")
    p.add_argument("--out")
    p.set_defaults(func=cmd_qf)

    p = sub.add_parser("bott", help="Bott classes of line expressions")
    p.add_argument("--expr", help="line expression, e.g. 'L1 + 2*L2^-1'")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", choices=("lines", "cyclotomic", "sphere"), default="lines")
    p.add_argument("--r", type=int, help="sphere parameter (mode=sphere)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_bott)

    p = sub.add_parser("serre-sqrt", help="square root of the Bott class")
    p.add_argument("--lams", required=True, help="lambda vector, e.g. '2,1'")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_serre_sqrt)

    p = sub.add_parser("clifford-check", help="Clifford group membership")
    p.add_argument("--form", required=True)
    p.add_argument("--element", required=True, help="e.g. '1 + 2*e1e2'")
    p.add_argument("--out")
    p.set_defaults(func=cmd_clifford_check)

    p = sub.add_parser("spin-lift", help="lift adjacent swaps to even square-one elements")
    p.add_argument("--form", required=True)
    p.add_argument("--copies", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_spin_lift)

    p = sub.add_parser("adams-module", help="module-level Adams operations and Bott class")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_adams_module)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", default="all", choices=("all",) + SUITES)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--timings", action="store_true",
                   help="include wall-clock time (report no longer byte-reproducible)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (ValueError, ArithmeticError, KeyError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
