"""Command-line interface.

One subcommand per computation, each with a ``--json`` switch.  Exit codes:
0 on success, 1 on a domain error (machine-readable {"error", "detail"}
JSON on stderr), 2 on usage errors or unreadable/invalid input files (text
diagnostic on stderr, naming the file and position where possible).

Text output and JSON output render the same computed values; nothing is
recomputed per mode.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .arith import DomainError, format_rational
from .gammaprod import (
    GammaProduct,
    SpectralCurveParams,
    chi_theta_generic,
    chi_theta_spectral,
    eval_exact,
    genus,
)
from .gradedring import WeightedSystem, verify_prop1
from .qchar import char_quotient, expand, limit_q1, q_euler


class FileFormatError(Exception):
    """Unreadable or invalid input file; maps to exit code 2."""


def _load_json(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FileFormatError(f"{path}: cannot read: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(
            f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from None


def _degree_list(doc: dict, key: str, path: str) -> list[int]:
    try:
        values = list(doc[key])
    except (KeyError, TypeError):
        raise FileFormatError(f"{path}: degrees file is missing list {key!r}") from None
    for v in values:
        if not isinstance(v, int) or v < 1:
            raise FileFormatError(
                f"{path}: entries of {key!r} must be positive integers, got {v!r}"
            )
    return values


def _build(path: str, builder, doc):
    try:
        return builder(doc)
    except DomainError as exc:
        raise FileFormatError(f"{path}: {exc}") from None


def _cmd_chi_spectral(args):
    p = SpectralCurveParams(args.N, args.n)
    g = genus(p)
    chi = chi_theta_spectral(p)
    generic = chi_theta_generic(g)
    report = {
        "N": p.N,
        "n": p.n,
        "genus": g,
        "chi_theta": format_rational(chi),
    }
    lines = [
        f"N = {p.N}  n = {p.n}  genus = {g}",
        f"spectral curve: chi(Theta) = {format_rational(chi)}",
        f"generic abelian variety of dimension {g}: chi(Theta) = "
        f"{format_rational(generic)}",
    ]
    return report, lines


def _cmd_chi_generic(args):
    chi = chi_theta_generic(args.genus)
    report = {"genus": args.genus, "chi_theta": format_rational(chi)}
    return report, [format_rational(chi)]


def _cmd_euler(args):
    doc = _load_json(args.degrees)
    a = _degree_list(doc, "a", args.degrees)
    f = _degree_list(doc, "f", args.degrees)
    D = _degree_list(doc, "D", args.degrees)
    character = q_euler(a, f, D)
    value = limit_q1(character)
    report = {
        "a": a,
        "f": f,
        "D": D,
        "character": character.as_json(),
        "limit_q1": format_rational(value),
    }
    lines = [
        f"character: {character}",
        f"limit q -> 1: {format_rational(value)}",
    ]
    return report, lines


def _cmd_char(args):
    doc = _load_json(args.degrees)
    a = _degree_list(doc, "a", args.degrees)
    f = _degree_list(doc, "f", args.degrees)
    character = char_quotient(a, f)
    report = {"character": character.as_json()}
    lines = [f"character: {character}"]
    if args.expand is not None:
        series = expand(character, args.expand)
        report["series"] = series.as_json()
        lines.append(f"series: {series}")
    return report, lines


def _cmd_verify_prop1(args):
    doc = _load_json(args.system)
    system = _build(args.system, WeightedSystem.from_json, doc)
    outcome = verify_prop1(system, args.max_degree)
    report = outcome.as_json()
    lines = [
        f"verdict: {outcome.verdict} (degrees 0..{outcome.max_degree - 1})",
        f"predicted: {list(outcome.predicted)}",
        f"computed:  {list(outcome.computed)}",
    ]
    if outcome.first_mismatch is not None:
        d = outcome.first_mismatch
        lines.append(
            f"first mismatch at degree {d}: predicted {outcome.predicted[d]}, "
            f"computed {outcome.computed[d]}"
        )
    return report, lines


def _cmd_gamma_eval(args):
    doc = _load_json(args.spec)
    product = _build(args.spec, GammaProduct.from_json, doc)
    value = eval_exact(product)
    return {"value": format_rational(value)}, [format_rational(value)]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thetachi",
        description="Exact Euler characteristics of theta divisors and related "
        "graded-ring computations.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True, metavar="command")

    def add(name, handler, help_text):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("--json", action="store_true", help="emit one JSON document")
        cmd.set_defaults(handler=handler)
        return cmd

    cmd = add(
        "chi-spectral",
        _cmd_chi_spectral,
        "Euler characteristic of the theta divisor for a smooth spectral curve",
    )
    cmd.add_argument("--N", type=int, required=True, help="number of sheets (>= 2)")
    cmd.add_argument("--n", type=int, required=True, help="coefficient degree scale (>= 1)")

    cmd = add(
        "chi-generic",
        _cmd_chi_generic,
        "Euler characteristic of the theta divisor of a generic abelian variety",
    )
    cmd.add_argument("--genus", type=int, required=True, help="dimension g (>= 1)")

    cmd = add(
        "euler",
        _cmd_euler,
        "q-Euler characteristic and its q -> 1 limit from a degrees file",
    )
    cmd.add_argument("--degrees", required=True, metavar="FILE",
                     help='JSON file {"a": [...], "f": [...], "D": [...]}')

    cmd = add(
        "char",
        _cmd_char,
        "character of a quotient by a regular sequence from a degrees file",
    )
    cmd.add_argument("--degrees", required=True, metavar="FILE",
                     help='JSON file {"a": [...], "f": [...]}')
    cmd.add_argument("--expand", type=int, metavar="T",
                     help="also expand the character to order T")

    cmd = add(
        "verify-prop1",
        _cmd_verify_prop1,
        "degreewise regular-sequence check on an explicit polynomial system",
    )
    cmd.add_argument("--system", required=True, metavar="FILE",
                     help="JSON system file (weights + generators)")
    cmd.add_argument("--max-degree", type=int, default=12, metavar="T",
                     help="check degrees 0..T-1 (default 12)")

    cmd = add("gamma-eval", _cmd_gamma_eval,
              "exact rational value of a Gamma product description")
    cmd.add_argument("--spec", required=True, metavar="FILE",
                     help="JSON Gamma product file (prefactor + factors)")

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        report, lines = args.handler(args)
    except FileFormatError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except DomainError as exc:
        doc = {"error": str(exc), "detail": args.subcommand}
        print(json.dumps(doc), file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(report))
    else:
        for line in lines:
            print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
