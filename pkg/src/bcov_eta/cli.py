"""Command-line interface.

Exit codes: 0 success, 1 verification failed, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Optional, Sequence

from . import oracle
from .eta import eta24_expansion
from .legendre import InadmissibleIndexError, check_index
from .render import rf_to_json, rf_to_latex, rf_to_text
from .solutions import (
    admissible_upto,
    construct_all,
    construct_r,
    enumerate_admissible,
    is_admissible,
    lambda_of,
    riccati_residual,
)

EXIT_OK, EXIT_FAILED, EXIT_INVALID = 0, 1, 2


class InvalidInput(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"malformed rational {text!r}") from None


def _index(i: int) -> int:
    try:
        check_index(i)
    except InadmissibleIndexError as exc:
        raise InvalidInput(f"inadmissible index {i}: gcd(i, 6) must be 1 and i >= 1") from exc
    return i


def _render(r, fmt: str) -> str:
    if fmt == "json":
        return rf_to_json(r)
    if fmt == "latex":
        return rf_to_latex(r)
    return rf_to_text(r)


def cmd_construct(args) -> int:
    print(_render(construct_r(_index(args.i)), args.format))
    return EXIT_OK


def cmd_verify(args) -> int:
    i = _index(args.i)
    lam = lambda_of(i) if args.lam is None else args.lam
    residual = riccati_residual(construct_r(i), lam)
    if residual.is_zero():
        print(f"i={i} lambda={lam}: residual = 0")
        return EXIT_OK
    print(f"i={i} lambda={lam}: residual = {rf_to_text(residual)}")
    return EXIT_FAILED


def _verify_one(item) -> tuple[int, bool]:
    i, r = item
    return i, riccati_residual(r, lambda_of(i)).is_zero()


def cmd_verify_all(args) -> int:
    if args.max_i < 1:
        raise InvalidInput("--max-i must be >= 1")
    indices = admissible_upto(args.max_i)
    solutions = construct_all(args.max_i)
    if args.parallel:
        with ProcessPoolExecutor() as pool:
            results = dict(pool.map(_verify_one, solutions.items()))
    else:
        results = dict(map(_verify_one, solutions.items()))
    for i in indices:
        print(f"i={i} lambda={lambda_of(i)}: {'ok' if results[i] else 'FAILED'}")
    passed = sum(results.values())
    print(f"{passed}/{len(indices)} indices verified")
    return EXIT_OK if passed == len(indices) else EXIT_FAILED


def cmd_enumerate(args) -> int:
    if args.k < 1:
        raise InvalidInput("--k must be >= 1")
    indices = enumerate_admissible(args.k)
    if args.format == "json":
        print(json.dumps(indices))
    else:
        print(" ".join(map(str, indices)))
    return EXIT_OK


def cmd_eta(args) -> int:
    if args.max_exponent < 1:
        raise InvalidInput("--max-exponent must be >= 1")
    series = eta24_expansion(args.max_exponent)
    print(series.to_json() if args.format == "json" else series.to_text())
    return EXIT_OK


def cmd_coefficient(args) -> int:
    if args.lam < 0:
        raise InvalidInput("lambda must be >= 0")
    coef = oracle.x13_coefficient(args.lam)
    if coef.kind == "value":
        print(f"lambda={args.lam}: x^(1/3) coefficient = {coef.value:.12g}; nonzero ⇒ not rational")
    else:
        print(f"lambda={args.lam}: {coef.kind} (admissible branch)")
    return EXIT_OK


def cmd_admissible(args) -> int:
    if args.lam < 0:
        raise InvalidInput("lambda must be >= 0")
    verdict = is_admissible(args.lam)
    if verdict.admissible:
        print(f"lambda={args.lam}: admissible, i={verdict.index}")
    else:
        print(f"lambda={args.lam}: not admissible")
    return EXIT_OK


def cmd_oracle_check(args) -> int:
    i = _index(args.i)
    if not 0 < args.x < Fraction(1, 432):
        raise InvalidInput(f"x = {args.x} outside the Ferrers-safe window (0, 1/432)")
    config = oracle.NumericConfig.from_env()
    result = oracle.compare_with_exact(i, args.x, args.tol, config)
    exact = "pole" if result.exact is None else f"{result.exact} ({float(result.exact):.15g})"
    print(f"i={i} x={args.x}: exact = {exact}, ferrers = {result.numeric:.15g}: "
          f"{'agree' if result.ok else 'DISAGREE'}")
    return EXIT_OK if result.ok else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bcov-eta",
        description="Rational solutions r(x, lambda) of the BCOV Riccati equation on elliptic curves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="print r(x, i^2/144)")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--format", choices=("text", "json", "latex"), default="text")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check the Riccati residual of r(x, i^2/144) exactly")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=_rational, default=None,
                   help="check against this lambda instead of i^2/144")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("verify-all", help="verify every admissible i <= max-i")
    p.add_argument("--max-i", type=int, required=True)
    p.add_argument("--parallel", action="store_true")
    p.set_defaults(func=cmd_verify_all)

    p = sub.add_parser("enumerate", help="first k admissible indices")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("eta", help="q-expansion of eta(q^24)")
    p.add_argument("--max-exponent", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_eta)

    p = sub.add_parser("coefficient", help="x^(1/3) coefficient of r(x, lambda) at infinity")
    p.add_argument("--lambda", dest="lam", type=_rational, required=True)
    p.set_defaults(func=cmd_coefficient)

    p = sub.add_parser("admissible", help="decide whether r(x, lambda) is rational")
    p.add_argument("--lambda", dest="lam", type=_rational, required=True)
    p.set_defaults(func=cmd_admissible)

    p = sub.add_parser("oracle-check", help="compare exact r with its Ferrers evaluation")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--x", type=_rational, required=True)
    p.add_argument("--tol", type=float, default=None)
    p.set_defaults(func=cmd_oracle_check)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    if hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(encoding="utf-8")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InvalidInput, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
