"""Batch command-line front end.

Exit codes are uniform across subcommands: 0 when every check holds, 1 when
a mathematical property failed or was not applicable, 2 on usage or input
errors. JSON reports carry exact values as canonical ``p/q`` strings (never
JSON numbers); only the quartic-integral fields are decimal floats.

Coefficient files are whitespace- or newline-separated rational tokens
(``p``, ``p/q``, or an exact decimal); ``#`` starts a comment.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from pathlib import Path

from . import __version__
from .boros_moll import bm_polynomial, bm_shifted_seq
from .fuzz_harness import TARGETS, CampaignSpec, run_campaign
from .numeric_core import DomainError, ParseError, parse_rational, render_rational
from .poly_ops import Polynomial, ShiftAlgorithm, taylor_shift
from .quartic_integral import QuadratureError, verify_identity
from .shape_props import (
    check_log_concave,
    check_no_internal_zeros,
    check_nonneg_nondecreasing,
    check_ratio_monotone,
    check_spiral,
    check_unimodal,
)

__all__ = ["entry", "main"]

_CHECKERS = {
    "nonneg-nondecreasing": check_nonneg_nondecreasing,
    "unimodal": check_unimodal,
    "spiral": check_spiral,
    "log-concave": check_log_concave,
    "ratio-monotone": check_ratio_monotone,
    "no-internal-zeros": check_no_internal_zeros,
}

_ALGOS = {
    "naive": ShiftAlgorithm.NAIVE_BINOMIAL,
    "horner": ShiftAlgorithm.HORNER_SYNTHETIC,
}


class _UsageError(Exception):
    """Maps to exit code 2."""


def _read_coefficients(path: str) -> list:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc}") from exc
    coeffs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0]
        for match in re.finditer(r"\S+", body):
            try:
                coeffs.append(parse_rational(match.group()))
            except (ParseError, DomainError) as exc:
                raise _UsageError(
                    f"{path}:{lineno}:{match.start() + 1}: {exc}") from exc
    if not coeffs:
        raise _UsageError(f"{path}: no coefficients found")
    return coeffs


def _report(command: str, inputs: dict, results: list, started: float) -> dict:
    return {
        "command": command,
        "version": __version__,
        "inputs": inputs,
        "results": results,
        "timing": {"seconds": time.perf_counter() - started},
    }


def _emit(doc: dict) -> None:
    print(json.dumps(doc, indent=2))


def _cmd_shift(args: argparse.Namespace) -> int:
    coeffs = _read_coefficients(args.file)
    try:
        c = parse_rational(args.c)
    except (ParseError, DomainError) as exc:
        raise _UsageError(f"--c: {exc}") from exc
    shifted = taylor_shift(Polynomial(coeffs), c, _ALGOS[args.algo])
    for value in shifted.coeffs:
        print(render_rational(value))
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    names = [p.strip() for p in args.props.split(",") if p.strip()]
    if "all" in names:
        names = list(_CHECKERS)
    unknown = [n for n in names if n not in _CHECKERS]
    if unknown:
        raise _UsageError(
            f"unknown properties {unknown}; choose from {list(_CHECKERS)} or 'all'")
    if not names:
        raise _UsageError("no properties requested")
    coeffs = _read_coefficients(args.file)
    verdicts = [_CHECKERS[name](coeffs) for name in names]
    doc = _report(
        "check",
        {"file": args.file,
         "coefficients": [render_rational(v) for v in coeffs],
         "props": names},
        [v.to_json_dict() for v in verdicts],
        started,
    )
    _emit(doc)
    return 0 if all(v.holds for v in verdicts) else 1


def _cmd_boros_moll(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    if args.m < 0:
        raise _UsageError(f"--m must be >= 0, got {args.m}")
    basis = "power-basis" if args.power_basis else "coefficients"
    values = bm_polynomial(args.m).coeffs if args.power_basis else bm_shifted_seq(args.m)
    rendered = [render_rational(v) for v in values]
    if args.json:
        _emit(_report("boros-moll", {"m": args.m, "mode": basis},
                      [{"m": args.m, "basis": basis, "coefficients": rendered}],
                      started))
    else:
        for token in rendered:
            print(token)
    return 0


def _cmd_verify_integral(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    if args.m < 0:
        raise _UsageError(f"--m must be >= 0, got {args.m}")
    check = verify_identity(args.x, args.m, args.tol)
    doc = _report("verify-integral",
                  {"m": args.m, "x": args.x, "tol": args.tol},
                  [check.to_json_dict()],
                  started)
    _emit(doc)
    return 0 if check.passed else 1


def _cmd_fuzz(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    try:
        shift_c = parse_rational(args.c)
    except (ParseError, DomainError) as exc:
        raise _UsageError(f"--c: {exc}") from exc
    spec = CampaignSpec(
        target=args.target,
        trials=args.trials,
        seed=args.seed,
        degree_range=(args.degree_min, args.degree_max),
        magnitude_bound=args.bound,
        integer_only=args.integer_only,
        shift_c=shift_c,
        allow_c_below_one=args.allow_c_below_one,
    )
    report = run_campaign(spec, jobs=args.jobs)
    doc = _report("fuzz", {"target": args.target}, [report.to_json_dict()], started)
    _emit(doc)
    return 1 if report.violations else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ratioshift",
        description="Exact Taylor shifts and coefficient-shape certification.")
    parser.add_argument("--version", action="version", version=f"ratioshift {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("shift", help="Taylor-shift a coefficient file by a rational c")
    p.add_argument("file", help="coefficient file, ascending degree")
    p.add_argument("--c", required=True, help="shift constant (rational text)")
    p.add_argument("--algo", choices=sorted(_ALGOS), default="horner")
    p.set_defaults(func=_cmd_shift)

    p = sub.add_parser("check", help="run shape-property checkers on a coefficient file")
    p.add_argument("file", help="coefficient file, ascending degree")
    p.add_argument("--props", required=True,
                   help=f"comma list from {list(_CHECKERS)} or 'all'")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("boros-moll", help="emit a Boros-Moll coefficient row")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--power-basis", action="store_true",
                   help="expand into power-basis coefficients of P_m(x)")
    p.add_argument("--json", action="store_true", help="wrap output in a JSON report")
    p.set_defaults(func=_cmd_boros_moll)

    p = sub.add_parser("verify-integral",
                       help="compare quadrature of the quartic integral to the closed form")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-8)
    p.set_defaults(func=_cmd_verify_integral)

    p = sub.add_parser("fuzz", help="run a seeded randomized campaign")
    p.add_argument("--target", required=True, choices=TARGETS)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--degree-min", type=int, default=2)
    p.add_argument("--degree-max", type=int, default=16)
    p.add_argument("--bound", type=int, default=10 ** 6)
    p.add_argument("--c", default="1", help="shift constant for corollary campaigns")
    p.add_argument("--integer-only", action="store_true")
    p.add_argument("--allow-c-below-one", action="store_true",
                   help="permit exploratory corollary runs with c < 1")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_fuzz)
    return parser


def _glue_c_values(argv: list[str]) -> list[str]:
    # argparse treats "-3/2" after "--c" as an unknown flag, so fold the
    # value into the option token before parsing.
    glued = []
    i = 0
    while i < len(argv):
        if argv[i] == "--c" and i + 1 < len(argv):
            glued.append(f"--c={argv[i + 1]}")
            i += 2
        else:
            glued.append(argv[i])
            i += 1
    return glued


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(_glue_c_values(list(argv if argv is not None else sys.argv[1:])))
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"ratioshift: error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, ParseError) as exc:
        print(f"ratioshift: error: {exc}", file=sys.stderr)
        return 2
    except QuadratureError as exc:
        print(f"ratioshift: quadrature did not converge: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())
