#!/usr/bin/env python3
"""pqfib CLI - evaluate and verify (p,q)-deformed Fibonacci and Lucas polynomials."""

import argparse
import csv
import json
import re
import sys
import time
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from pqfib import __version__
from pqfib.config import get_typed_config, validate_config
from pqfib.errors import PqfibError, UsageError
from pqfib.generating_functions import (
    fib_genfunc_closed,
    fib_genfunc_definitional,
    lucas_genfunc_closed,
    lucas_genfunc_definitional,
)
from pqfib.logger import log_action
from pqfib.performance import get_monitor
from pqfib.polynomials import classical_number_formula, family_poly, fibonacci_number, lucas_number
from pqfib.pq_arithmetic import FIBONACCI, LUCAS, PQParams, normalize_family
from pqfib.ui import format_table, heading, status_label
from pqfib.verification import SUITES, run_suites

EXACT = "exact"
FLOAT = "float"
FORMATS = ("json", "csv", "plain")

_INTEGER = re.compile(r"^[+-]?\d+$")
_RATIONAL = re.compile(r"^([+-]?\d+)/(\d+)$")
_DECIMAL = re.compile(r"^[+-]?(\d+\.\d*|\.\d+|\d+)([eE][+-]?\d+)?$")


def parse_scalar(text: str, mode: str, name: str) -> Any:
    """
    Parse a numeric literal for the given mode.

    Exact mode accepts integers and NUM/DEN rationals; float mode accepts
    integers and decimals. A literal of the other mode is a usage error.
    """
    text = text.strip()
    if _INTEGER.match(text):
        return Fraction(int(text)) if mode == EXACT else float(text)

    rational = _RATIONAL.match(text)
    if rational:
        if mode == FLOAT:
            raise UsageError(f"--{name}: rational literal {text!r} in float mode; use a decimal or --mode exact")
        num, den = int(rational.group(1)), int(rational.group(2))
        if den == 0:
            raise UsageError(f"--{name}: zero denominator in {text!r}")
        return Fraction(num, den)

    if _DECIMAL.match(text):
        if mode == EXACT:
            raise UsageError(f"--{name}: decimal literal {text!r} in exact mode; use NUM/DEN or --mode float")
        return float(text)

    raise UsageError(f"--{name}: malformed number {text!r}")


def format_value(value: Any) -> Any:
    """JSON-ready form of a scalar: rationals as 'NUM/DEN' strings, floats unchanged."""
    if isinstance(value, bool):
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return value
    return str(value)


def make_record(command: str, inputs: Dict[str, Any], results: Dict[str, Any]) -> Dict[str, Any]:
    return {"command": command, "inputs": inputs, "results": results, "version": __version__}


def _params(args) -> PQParams:
    return PQParams(parse_scalar(args.p, args.mode, "p"), parse_scalar(args.q, args.mode, "q"))


def _family(text: str) -> str:
    try:
        return normalize_family(text)
    except PqfibError as e:
        raise UsageError(str(e)) from e


def _emit(args, record: Dict[str, Any], fieldnames: Sequence[str], rows: List[Dict[str, Any]], title: str) -> None:
    """Write the record as JSON, or its rows as CSV or a plain table."""
    if args.format == "json":
        print(json.dumps(record, sort_keys=True, indent=2))
    elif args.format == "csv":
        writer = csv.DictWriter(sys.stdout, fieldnames=list(fieldnames), lineterminator="\n", extrasaction="ignore")
        writer.writeheader()
        for row in rows:
            writer.writerow(row)
    else:
        color = sys.stdout.isatty()
        print(heading(title, color=color))
        table_rows = [[_plain(row.get(f)) for f in fieldnames] for row in rows]
        print(format_table(list(fieldnames), table_rows, align=["right"] * len(fieldnames), color=color))


def _plain(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def cmd_eval(args):
    """Handle eval command."""
    start = time.perf_counter()
    family = _family(args.family)
    if args.n < 0:
        raise UsageError(f"--n must be >= 0, got {args.n}")
    params = _params(args)
    s = parse_scalar(args.s, args.mode, "s")
    x = parse_scalar(args.x, args.mode, "x") if args.x is not None else None

    poly = family_poly(family, args.n, params, s)
    coefficients = [{"power": k, "coefficient": format_value(c)} for k, c in poly.nonzero_terms()]
    results: Dict[str, Any] = {"degree": poly.degree, "coefficients": coefficients}
    if x is not None:
        results["value"] = format_value(poly.evaluate(params.scalar(x)))

    inputs = {
        "family": family,
        "n": args.n,
        "p": format_value(params.p),
        "q": format_value(params.q),
        "s": format_value(s),
        "x": None if x is None else format_value(x),
        "mode": args.mode,
    }
    duration_ms = (time.perf_counter() - start) * 1000
    log_action("eval", inputs, results, True, duration_ms)

    rows = [{"n": args.n, "power": t["power"], "coefficient": t["coefficient"]} for t in coefficients]
    title = f"{family} n={args.n}" + (f"  value={results['value']}" if x is not None else "")
    _emit(args, make_record("eval", inputs, results), ("n", "power", "coefficient"), rows, title)
    return 0


def cmd_numbers(args):
    """Handle numbers command."""
    start = time.perf_counter()
    family = _family(args.family)
    if args.n_max < 0:
        raise UsageError(f"--n-max must be >= 0, got {args.n_max}")
    params = _params(args)
    number = fibonacci_number if family == FIBONACCI else lucas_number
    classical = params.p == 1 and params.q == 1

    rows = []
    for n in range(args.n_max + 1):
        value = number(n, params)
        row: Dict[str, Any] = {"n": n, "value": format_value(value)}
        if classical:
            # The Lucas binomial sum has no n = 0 term
            reference = None if family == LUCAS and n == 0 else classical_number_formula(family, n)
            row["classical"] = None if reference is None else format_value(reference)
            row["match"] = None if reference is None else value == reference
        rows.append(row)

    inputs = {
        "family": family,
        "n_max": args.n_max,
        "p": format_value(params.p),
        "q": format_value(params.q),
        "mode": args.mode,
    }
    results = {"values": rows}
    duration_ms = (time.perf_counter() - start) * 1000
    log_action("numbers", inputs, {"count": len(rows)}, True, duration_ms)

    fieldnames = ("n", "value", "classical", "match") if classical else ("n", "value")
    _emit(args, make_record("numbers", inputs, results), fieldnames, rows, f"{family} numbers")
    return 0


def _series_match(left, right, mode: str, tolerance: float) -> bool:
    if mode == EXACT:
        return left == right
    return all(abs(a - b) <= tolerance * (1 + abs(b)) for a, b in zip(left.coeffs, right.coeffs))


def cmd_genfunc(args):
    """Handle genfunc command."""
    start = time.perf_counter()
    config = get_typed_config()
    family = _family(args.family)
    order = config.default_order if args.order is None else args.order
    if not 0 <= order <= config.max_order:
        raise UsageError(f"--order must be between 0 and {config.max_order}, got {order}")
    params = _params(args)
    s = parse_scalar(args.s, args.mode, "s")
    x = parse_scalar(args.x, args.mode, "x")

    if family == FIBONACCI:
        definitional = fib_genfunc_definitional(x, s, params, order)
        closed = fib_genfunc_closed(x, s, params, order)
    else:
        definitional = lucas_genfunc_definitional(x, s, params, order)
        closed = lucas_genfunc_closed(x, s, params, order)
    match = _series_match(definitional, closed, args.mode, config.numeric_tolerance)

    inputs = {
        "family": family,
        "order": order,
        "p": format_value(params.p),
        "q": format_value(params.q),
        "s": format_value(s),
        "x": format_value(x),
        "mode": args.mode,
    }
    results = {
        "definitional": [format_value(c) for c in definitional.coeffs],
        "closed": [format_value(c) for c in closed.coeffs],
        "match": match,
    }
    duration_ms = (time.perf_counter() - start) * 1000
    log_action("genfunc", inputs, {"match": match, "order": order}, match, duration_ms)

    rows = [
        {"m": m, "definitional": d, "closed": c}
        for m, (d, c) in enumerate(zip(results["definitional"], results["closed"]))
    ]
    title = f"{family} generating function  match={_plain(match)}"
    _emit(args, make_record("genfunc", inputs, results), ("m", "definitional", "closed"), rows, title)
    return 0


def cmd_verify(args):
    """Handle verify command - exit 0 when every check passes, 1 otherwise."""
    start = time.perf_counter()
    config = get_typed_config()
    seed = config.verify_seed if args.seed is None else args.seed
    n_max = config.verify_n_max if args.n_max is None else args.n_max
    if n_max < 0:
        raise UsageError(f"--n-max must be >= 0, got {n_max}")

    monitor = get_monitor()
    monitor.clear()
    reports = run_suites(args.suite, seed=seed, n_max=n_max, config=config)
    passed = all(r.passed for r in reports)
    usage = monitor.get_summary()

    inputs = {"suite": args.suite, "seed": seed, "n_max": n_max}
    results = {"passed": passed, "suites": [r.to_dict() for r in reports]}
    duration_ms = (time.perf_counter() - start) * 1000
    log_action(
        "verify",
        inputs,
        {
            "passed": passed,
            "suites": [r.suite for r in reports],
            "suite_duration_ms": usage["total_duration_ms"],
            "memory_delta_mb": usage["total_memory_delta_mb"],
        },
        passed,
        duration_ms,
    )

    color = sys.stdout.isatty()
    rows = []
    for report in reports:
        for check in report.checks:
            rows.append(
                {
                    "suite": report.suite,
                    "check": check.name,
                    "identity": check.identity,
                    "anchor": check.anchor,
                    "status": status_label(check.passed, color=color and args.format == "plain"),
                    "cases": check.cases,
                    "failures": check.failure_count,
                }
            )
    title = f"verify {args.suite} (seed {seed}, n_max {n_max}): {status_label(passed, color=color)}"
    fieldnames = ("suite", "check", "identity", "anchor", "status", "cases", "failures")
    _emit(args, make_record("verify", inputs, results), fieldnames, rows, title)
    return 0 if passed else 1


def cmd_config_validate(args):
    """Handle config validate command."""
    is_valid, errors = validate_config(args.config)

    if is_valid:
        print("Configuration is valid")
        return 0
    else:
        print("Configuration has errors:")
        for error in errors:
            print(f"  - {error}")
        return 1


def _add_params(parser, with_s: bool = True, x_required: Optional[bool] = None):
    parser.add_argument("--family", default="fib", help="fib or lucas (default: fib)")
    parser.add_argument("--p", required=True, help="Deformation parameter p")
    parser.add_argument("--q", required=True, help="Deformation parameter q")
    if with_s:
        parser.add_argument("--s", default="1", help="Second polynomial variable s (default: 1)")
    if x_required is not None:
        parser.add_argument("--x", required=x_required, default=None, help="Evaluation point x")
    parser.add_argument(
        "--mode", choices=(EXACT, FLOAT), default=EXACT,
        help="exact: integers and NUM/DEN; float: decimals (default: exact)"
    )
    parser.add_argument("--format", choices=FORMATS, default="json", help="Output format (default: json)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pqfib",
        description="(p,q)-deformed Fibonacci and Lucas polynomials",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )

    subparsers = parser.add_subparsers(dest="command", required=True)

    # eval
    p_eval = subparsers.add_parser("eval", help="Coefficients of one polynomial, and its value at x")
    p_eval.add_argument("--n", type=int, required=True, help="Polynomial index")
    _add_params(p_eval, x_required=False)
    p_eval.set_defaults(func=cmd_eval)

    # numbers
    p_numbers = subparsers.add_parser("numbers", help="Table of (p,q)-Fibonacci or Lucas numbers")
    p_numbers.add_argument("--n-max", type=int, required=True, help="Largest index")
    _add_params(p_numbers, with_s=False)
    p_numbers.set_defaults(func=cmd_numbers)

    # genfunc
    p_genfunc = subparsers.add_parser("genfunc", help="Generating function coefficients, definitional vs closed")
    p_genfunc.add_argument("--order", type=int, default=None, help="Truncation order (default from config)")
    _add_params(p_genfunc, x_required=True)
    p_genfunc.set_defaults(func=cmd_genfunc)

    # verify
    p_verify = subparsers.add_parser("verify", help="Run seeded identity sweeps")
    p_verify.add_argument("--suite", choices=SUITES + ("all",), default="all", help="Suite to run (default: all)")
    p_verify.add_argument("--seed", type=int, default=None, help="Random seed (default from config)")
    p_verify.add_argument("--n-max", type=int, default=None, help="Largest index swept (default from config)")
    p_verify.add_argument("--format", choices=FORMATS, default="json", help="Output format (default: json)")
    p_verify.set_defaults(func=cmd_verify)

    # config
    p_config = subparsers.add_parser("config", help="Configuration management")
    config_subparsers = p_config.add_subparsers(dest="config_command", required=True)

    p_config_validate = config_subparsers.add_parser("validate", help="Validate configuration file")
    p_config_validate.add_argument("--config", default=None, help="Path to config file")
    p_config_validate.set_defaults(func=cmd_config_validate)

    return parser


def main(argv: Optional[List[str]] = None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PqfibError as e:
        print(f"pqfib {args.command}: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
