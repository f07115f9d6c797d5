"""Command-line interface.

Thin argparse wrapper over the library: every number the commands print is
produced by the package modules, never computed here.  All rational inputs
accept ``p/q`` strings; ``--lambda`` additionally accepts the word
``symbolic`` to keep the deformation parameter as a polynomial variable.
Domain errors (zero lambda, unsupported parameter ranges, unknown check ids)
exit with status 2; the ``verify`` command exits 0 when every check passes
and 1 otherwise.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import mpmath

from .bernoulli import bernoulli_base_series, bernoulli_higher
from .identities import CHECKS, SuiteConfig, run_suite
from .poly import LambdaScalar, SYMBOLIC, csv_element, format_element
from .rational import parse_rational
from .stirling import (
    rstirling1_lambda,
    rstirling2_lambda,
    second_kind_series,
    stirling1_lambda,
    stirling2_lambda,
    unsigned_rstirling1_lambda,
)
from .whitney import (
    UnsupportedDomainError,
    bell_poly_lambda,
    dobinski_eval,
    dowling_poly,
    dowling_series,
    whitney,
    whitney_r,
    whitney_series,
)

TRIANGLE_FAMILIES = {
    # name -> (value function, takes r, takes m)
    "s2lambda": (lambda n, k, r, m, lam: stirling2_lambda(n, k, lam), False, False),
    "rstirling2": (lambda n, k, r, m, lam: rstirling2_lambda(n, k, r, lam), True, False),
    "s1lambda": (lambda n, k, r, m, lam: stirling1_lambda(n, k, lam), False, False),
    "rstirling1": (lambda n, k, r, m, lam: rstirling1_lambda(n, k, r, lam), True, False),
    "rstirling1-unsigned": (
        lambda n, k, r, m, lam: unsigned_rstirling1_lambda(n, k, r, lam),
        True,
        False,
    ),
    "whitney": (lambda n, k, r, m, lam: whitney(n, k, m, lam), False, True),
    "whitney-r": (lambda n, k, r, m, lam: whitney_r(n, k, m, r, lam), True, True),
}


def _parse_lambda(text: str) -> LambdaScalar:
    if text.strip().lower() == "symbolic":
        return SYMBOLIC
    return LambdaScalar.fixed(parse_rational(text))


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)
            if not text.endswith("\n"):
                handle.write("\n")


def _add_lambda_argument(parser: argparse.ArgumentParser, required: bool = True):
    parser.add_argument(
        "--lambda",
        dest="lam",
        required=required,
        default=None,
        help="deformation parameter: a rational like 1/2, or 'symbolic'",
    )


def _add_output_argument(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--output",
        default=None,
        metavar="PATH",
        help="write to PATH instead of stdout",
    )


def _cmd_triangle(args) -> int:
    value_fn, takes_r, takes_m = TRIANGLE_FAMILIES[args.family]
    if args.r is not None and not takes_r:
        raise ValueError(f"family {args.family!r} does not take --r")
    if args.m is not None and not takes_m:
        raise ValueError(f"family {args.family!r} does not take --m")
    r = args.r if args.r is not None else 0
    m = args.m if args.m is not None else 1
    if takes_r and args.r is None:
        raise ValueError(f"family {args.family!r} needs --r")
    if takes_m and args.m is None:
        raise ValueError(f"family {args.family!r} needs --m")
    lam = _parse_lambda(args.lam)
    cells = [
        (n, k, value_fn(n, k, r, m, lam))
        for n in range(args.n_max + 1)
        for k in range(n + 1)
    ]
    if args.format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer)
        writer.writerow(["n", "k", "value"])
        for n, k, value in cells:
            writer.writerow([n, k, csv_element(value)])
        _emit(buffer.getvalue(), args.output)
    else:
        payload = {
            "family": args.family,
            "n_max": args.n_max,
            "lambda": str(lam),
            "rows": [
                {"n": n, "k": k, "value": format_element(value)}
                for n, k, value in cells
            ],
        }
        if takes_r:
            payload["r"] = r
        if takes_m:
            payload["m"] = m
        _emit(json.dumps(payload, indent=2), args.output)
    return 0


def _cmd_eval(args) -> int:
    lam = _parse_lambda(args.lam)
    x = parse_rational(args.x)
    if args.poly == "dowling":
        value = dowling_poly(args.n, x, args.m, lam)
    else:
        value = bell_poly_lambda(args.n, x, lam)
    if args.format == "json":
        payload = {
            "poly": args.poly,
            "n": args.n,
            "x": str(x),
            "lambda": str(lam),
            "value": format_element(value),
        }
        if args.poly == "dowling":
            payload["m"] = args.m
        _emit(json.dumps(payload, indent=2), args.output)
    else:
        _emit(csv_element(value), args.output)
    return 0


def _cmd_dobinski(args) -> int:
    lam = _parse_lambda(args.lam)
    if lam.is_symbolic:
        raise ValueError("the series evaluation needs a fixed rational lambda")
    x = parse_rational(args.x)
    result = dobinski_eval(args.n, x, args.m, lam.value, args.tol)
    payload = {
        "n": result.n,
        "x": str(result.x),
        "m": result.m,
        "lambda": str(result.lam),
        "exact": format_element(result.exact),
        "numeric": mpmath.nstr(result.numeric, args.digits),
        "tail_bound": result.tail_bound,
        "truncation_terms": result.truncation_terms,
    }
    _emit(json.dumps(payload, indent=2), args.output)
    return 0


def _cmd_bernoulli(args) -> int:
    x = parse_rational(args.x)
    rows = [(n, bernoulli_higher(n, args.m, x)) for n in range(args.n_max + 1)]
    if args.format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer)
        writer.writerow(["n", "value"])
        for n, value in rows:
            writer.writerow([n, csv_element(value)])
        _emit(buffer.getvalue(), args.output)
    else:
        payload = {
            "order": args.m,
            "x": str(x),
            "n_max": args.n_max,
            "rows": [{"n": n, "value": format_element(v)} for n, v in rows],
        }
        _emit(json.dumps(payload, indent=2), args.output)
    return 0


def _cmd_verify(args) -> int:
    overrides = {}
    if args.theorem:
        overrides["theorems"] = tuple(args.theorem)
    if args.n_max is not None:
        overrides["n_max"] = args.n_max
    if args.bernoulli_n_max is not None:
        overrides["bernoulli_n_max"] = args.bernoulli_n_max
    config = SuiteConfig(**overrides)
    config.validate()  # unknown ids exit 2 before any check runs
    result = run_suite(config)
    _emit(result.to_json_lines(), args.output)
    return result.exit_status


def _cmd_dump_series(args) -> int:
    kind = args.kind
    if kind == "bernoulli-base":
        series = bernoulli_base_series(args.m, args.order)
    else:
        lam = _parse_lambda(args.lam if args.lam is not None else "symbolic")
        if kind == "stirling2":
            series = second_kind_series(args.k, 0, lam, args.order)
        elif kind == "rstirling2":
            series = second_kind_series(args.k, args.r, lam, args.order)
        elif kind == "whitney":
            series = whitney_series(args.k, args.m, 1, lam, args.order)
        elif kind == "whitney-r":
            series = whitney_series(args.k, args.m, args.r, lam, args.order)
        else:  # dowling
            x = parse_rational(args.x)
            series = dowling_series(x, args.m, lam, args.order)
    payload = {"kind": kind, **series.to_json()}
    _emit(json.dumps(payload, indent=2), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lambda-stirling",
        description=(
            "Exact tables, polynomial evaluations, generating-function "
            "coefficients and identity verification for the deformed "
            "(lambda-analogue) Stirling and Whitney number families."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_triangle = sub.add_parser(
        "triangle", help="tabulate a number-triangle family as CSV or JSON"
    )
    p_triangle.add_argument(
        "--family", required=True, choices=sorted(TRIANGLE_FAMILIES)
    )
    p_triangle.add_argument("--n-max", type=int, required=True)
    p_triangle.add_argument("--r", type=int, default=None, help="shift parameter")
    p_triangle.add_argument("--m", type=int, default=None, help="block-size parameter")
    _add_lambda_argument(p_triangle)
    p_triangle.add_argument("--format", choices=("csv", "json"), default="csv")
    _add_output_argument(p_triangle)
    p_triangle.set_defaults(fn=_cmd_triangle)

    p_eval = sub.add_parser(
        "eval", help="evaluate a Dowling or deformed Bell polynomial exactly"
    )
    p_eval.add_argument("--poly", required=True, choices=("dowling", "bell"))
    p_eval.add_argument("--n", type=int, required=True)
    p_eval.add_argument("--x", required=True, help="evaluation point, rational")
    p_eval.add_argument("--m", type=int, default=1)
    _add_lambda_argument(p_eval)
    p_eval.add_argument("--format", choices=("text", "json"), default="text")
    _add_output_argument(p_eval)
    p_eval.set_defaults(fn=_cmd_eval)

    p_dob = sub.add_parser(
        "dobinski",
        help="evaluate a Dowling polynomial through its convergent series, "
        "with exact reference and tail bound",
    )
    p_dob.add_argument("--n", type=int, required=True)
    p_dob.add_argument("--x", required=True)
    p_dob.add_argument("--m", type=int, default=1)
    _add_lambda_argument(p_dob)
    p_dob.add_argument("--tol", type=float, default=1e-12)
    p_dob.add_argument(
        "--digits", type=int, default=20, help="significant digits printed"
    )
    _add_output_argument(p_dob)
    p_dob.set_defaults(fn=_cmd_dobinski)

    p_bern = sub.add_parser(
        "bernoulli", help="tabulate higher-order Bernoulli polynomial values"
    )
    p_bern.add_argument("--n-max", type=int, required=True)
    p_bern.add_argument("--m", type=int, required=True, help="order of the family")
    p_bern.add_argument("--x", required=True, help="argument, rational")
    p_bern.add_argument("--format", choices=("csv", "json"), default="csv")
    _add_output_argument(p_bern)
    p_bern.set_defaults(fn=_cmd_bernoulli)

    p_verify = sub.add_parser(
        "verify",
        help="run the identity-verification suite; JSON-lines report, "
        "exit 0 iff every check passes",
    )
    p_verify.add_argument(
        "--theorem",
        action="append",
        default=None,
        metavar="ID",
        help=f"restrict to a check id (repeatable); known: {', '.join(CHECKS)}",
    )
    p_verify.add_argument("--n-max", type=int, default=None)
    p_verify.add_argument("--bernoulli-n-max", type=int, default=None)
    _add_output_argument(p_verify)
    p_verify.set_defaults(fn=_cmd_verify)

    p_dump = sub.add_parser(
        "dump-series",
        help="dump truncated exponential-generating-function coefficients",
    )
    p_dump.add_argument(
        "--kind",
        required=True,
        choices=(
            "stirling2",
            "rstirling2",
            "whitney",
            "whitney-r",
            "bernoulli-base",
            "dowling",
        ),
    )
    p_dump.add_argument("--order", type=int, required=True)
    p_dump.add_argument("--k", type=int, default=0, help="column index")
    p_dump.add_argument("--r", type=int, default=0)
    p_dump.add_argument("--m", type=int, default=1)
    p_dump.add_argument("--x", default="1", help="Dowling evaluation point")
    _add_lambda_argument(p_dump, required=False)
    _add_output_argument(p_dump)
    p_dump.set_defaults(fn=_cmd_dump_series)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, ZeroDivisionError, UnsupportedDomainError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
