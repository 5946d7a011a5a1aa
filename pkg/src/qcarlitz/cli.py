"""Command-line interface.

    qcarlitz beta --n 4 [--at-q 1] [--format json]
    qcarlitz hankel --shift 0 --n 3 [--verify]
    qcarlitz cfrac --series B --order 8 [--check]
    qcarlitz verify --profile quick

Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 internal error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .bernoulli import beta_numbers
from .contfrac import SERIES_IDS, closed_sfraction, moment_series, sfraction_series
from .hankel import closed_form_shift, hankel_det
from .ratfunc import PoleError, rational_to_json
from .verify import PROFILES, format_report, run_all

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def _positive(text: str) -> int:
    value = _natural(text)
    if value == 0:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return value


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational number such as 2 or -1/3, got {text!r}")


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def cmd_beta(args) -> int:
    betas = beta_numbers(args.n)
    values = None
    if args.at_q is not None:
        try:
            values = [b.eval(args.at_q) for b in betas]
        except PoleError as exc:
            raise UsageError(f"cannot evaluate at q = {args.at_q}: {exc}")
    if args.format == "json":
        out = {"beta": [b.to_json() for b in betas]}
        if values is not None:
            out["at_q"] = rational_to_json(args.at_q)
            out["values"] = [rational_to_json(v) for v in values]
        print(_dump(out))
        return EXIT_OK
    for n, b in enumerate(betas):
        line = f"beta_{n} = {b}"
        if values is not None:
            line += f"    [q = {args.at_q}: {values[n]}]"
        print(line)
    return EXIT_OK


def cmd_hankel(args) -> int:
    betas = beta_numbers(max(2 * args.n - 2 + args.shift, 0))
    value = hankel_det(betas, args.n, args.shift)
    status = None
    if args.verify:
        if args.shift <= 3:
            status = "EQUAL" if value == closed_form_shift(args.shift, args.n) else "DIFFER"
        else:
            status = "UNVERIFIED"
    if args.format == "json":
        out = {"shift": args.shift, "n": args.n, "value": value.to_json()}
        if status is not None:
            out["status"] = status
        print(_dump(out))
    else:
        print(f"det(beta_(i+j+{args.shift}))_(0<=i,j<{args.n}) = {value}")
        if status == "UNVERIFIED":
            print("UNVERIFIED (no closed form for shift >= 4)")
        elif status is not None:
            print(status)
    return EXIT_MISMATCH if status == "DIFFER" else EXIT_OK


def cmd_cfrac(args) -> int:
    S = closed_sfraction(args.series, args.order)
    status = None
    if args.check:
        same = sfraction_series(S, args.order) == moment_series(args.series, args.order)
        status = "OK" if same else "MISMATCH"
    if args.format == "json":
        out = {"series": args.series, "c": [c.to_json() for c in S.c]}
        if status is not None:
            out["check"] = status
        print(_dump(out))
    else:
        for k, c in enumerate(S.c, start=1):
            print(f"c_{k} = {c}")
        if status is not None:
            print(status)
    return EXIT_MISMATCH if status == "MISMATCH" else EXIT_OK


def cmd_verify(args) -> int:
    results = run_all(args.profile)
    if args.format == "json":
        rows = [
            {"criterion": c.number, "name": c.name, "pass": ok, "detail": detail}
            for c, ok, detail in results
        ]
        print(_dump({"profile": args.profile, "results": rows}))
    else:
        print(format_report(results, args.profile))
    return EXIT_OK if all(ok for _, ok, _ in results) else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcarlitz",
        description="Exact q-Bernoulli-Carlitz numbers, Hankel determinants and continued fractions.",
        allow_abbrev=False,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text, allow_abbrev=False)
        p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    p = add("beta", "print beta_0 .. beta_n")
    p.add_argument("--n", type=_natural, required=True)
    p.add_argument("--at-q", type=_rational, default=None, dest="at_q")
    p.set_defaults(func=cmd_beta)

    p = add("hankel", "Hankel determinant det(beta_(i+j+shift)) of size n")
    p.add_argument("--shift", type=_natural, default=0)
    p.add_argument("--n", type=_natural, required=True)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_hankel)

    p = add("cfrac", "S-fraction coefficients c_1 .. c_order")
    p.add_argument("--series", choices=SERIES_IDS, required=True)
    p.add_argument("--order", type=_positive, default=12)
    p.add_argument("--check", action="store_true")
    p.set_defaults(func=cmd_cfrac)

    p = add("verify", "run the acceptance checks")
    p.add_argument("--profile", choices=tuple(PROFILES), default="quick")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
