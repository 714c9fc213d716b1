"""Command-line front end: exact text or JSON reports for every operation.

Exit codes: 0 success, 1 parse error, 2 mathematical precondition violated
(including a failed numeric tolerance check), 3 unsupported feature.  Exact
fields are rendered as fraction strings and never contain decimal points;
numeric-lab fields are plain floats.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from .bundle_constructor import (
    build_balanced,
    build_t_gauduchon,
    lee_form_coefficients,
    verify_c1_trivial,
    verify_coclosed,
    verify_ricci_flat,
)
from .errors import FlagcyError, UnsupportedType
from .flag_geometry import (
    InvariantClass,
    ParabolicFlag,
    anticanonical_class,
    anticanonical_coeffs,
    class_from_coeffs,
    degree,
    fano_index,
    make_flag,
)
from .picard_lattice import LineBundleClass, primitive_basis
from .potential_lab import check_eigenvalue_formula
from .root_system import LieType, build_root_datum


class _CliParseError(Exception):
    """Raised for anything the argument layer cannot make sense of."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would sys.exit(2); we map parse errors to 1
        raise _CliParseError(message)


def _parse_parabolic(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise _CliParseError(f"cannot parse parabolic set {text!r}: {exc}") from exc


def _parse_fractions(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(part.strip()) for part in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise _CliParseError(f"cannot parse rational vector {text!r}: {exc}") from exc


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise _CliParseError(f"cannot parse rational {text!r}: {exc}") from exc


def _parse_bundle(text: str) -> LineBundleClass:
    try:
        return LineBundleClass(tuple(int(part.strip()) for part in text.split(",")))
    except ValueError as exc:
        raise _CliParseError(f"cannot parse bundle exponents {text!r}: {exc}") from exc


def _build_flag(args) -> ParabolicFlag:
    datum = build_root_datum(LieType(args.family, args.rank))
    return make_flag(datum, _parse_parabolic(args.parabolic))


def _omega0_from_arg(flag: ParabolicFlag, text: str) -> InvariantClass:
    if text.strip() == "anticanonical":
        return anticanonical_class(flag)
    return class_from_coeffs(flag, _parse_fractions(text))


def _frac(value) -> str:
    return str(Fraction(value))


def _alpha_key(alpha: int) -> str:
    return f"alpha_{alpha}"


def _coeff_map(flag: ParabolicFlag, values, render=_frac) -> dict:
    return {_alpha_key(a): render(v) for a, v in zip(flag.complement, values)}


def _class_json(flag: ParabolicFlag, c: InvariantClass) -> dict:
    return {"two_pi_power": c.two_pi_power, "coeffs": _coeff_map(flag, c.coeffs)}


def _inputs_echo(args) -> dict:
    keys = ("family", "rank", "parabolic", "omega0", "gamma", "k", "t",
            "bundle", "psi", "step", "tol", "diagnostic", "format")
    return {k: getattr(args, k) for k in keys if hasattr(args, k)}


def _cmd_describe(args) -> dict:
    flag = _build_flag(args)
    ell = anticanonical_coeffs(flag)
    off = set(flag.phi_complement)
    table = [
        {
            "root": list(beta.root_coords),
            "coroot": [_frac(c) for c in beta.coroot_coords],
            "height": beta.height,
            "off_parabolic": beta in off,
        }
        for beta in flag.datum.positive_roots
    ]
    return {
        "dim_c": flag.dim_c,
        "picard_rank": flag.picard_rank,
        "fano_index": fano_index(flag),
        "anticanonical": _coeff_map(flag, ell, render=int),
        "kahler_cone_generators": [_alpha_key(a) for a in flag.complement],
        "positive_roots": table,
    }


def _cmd_primitive_basis(args) -> dict:
    flag = _build_flag(args)
    omega0 = _omega0_from_arg(flag, args.omega0)
    pb = primitive_basis(flag, omega0, args.gamma)
    degrees = []
    for xi in pb.basis:
        value, power = degree(flag, xi.to_class(), omega0)
        degrees.append({"value": _frac(value), "two_pi_power": power})
    return {
        "pivot": _alpha_key(pb.pivot_gamma),
        "tau": pb.tau,
        "q": _coeff_map(flag, pb.q, render=int),
        "basis": [_coeff_map(flag, xi.coeffs, render=int) for xi in pb.basis],
        "degrees": degrees,
    }


def _cmd_gauduchon(args) -> dict:
    flag = _build_flag(args)
    bundles = [_parse_bundle(text) for text in args.bundle]
    datum = build_t_gauduchon(
        flag, args.k, _parse_fraction(args.t), bundles, diagnostic=args.diagnostic
    )
    residual = verify_ricci_flat(datum)
    ratio = verify_c1_trivial(datum)
    lee = lee_form_coefficients(flag, datum.psi, datum.omega0)
    return {
        "ricci_flat_scale": _frac(datum.scale),
        "omega0": _class_json(flag, datum.omega0),
        "psi": [_class_json(flag, p) for p in datum.psi],
        "ricci_residual": _class_json(flag, residual),
        "ricci_flat": residual.is_zero,
        "c1_ratio": _frac(ratio),
        "lee_form": [_frac(v) for v in lee],
    }


def _cmd_balanced(args) -> dict:
    flag = _build_flag(args)
    omega0 = _omega0_from_arg(flag, args.omega0)
    bundles = [_parse_bundle(text) for text in args.bundle]
    datum = build_balanced(flag, omega0, bundles)
    coclosed = verify_coclosed(datum)
    lee = lee_form_coefficients(flag, datum.psi, datum.omega0)
    return {
        "omega0": _class_json(flag, datum.omega0),
        "psi": [_class_json(flag, p) for p in datum.psi],
        "coclosed": [_frac(v) for v in coclosed],
        "lee_form": [_frac(v) for v in lee],
        "balanced": all(v == 0 for v in coclosed),
    }


def _cmd_verify_numeric(args) -> dict:
    flag = _build_flag(args)
    if args.omega0.strip() == "anticanonical":
        omega_coeffs = [Fraction(l) for l in anticanonical_coeffs(flag)]
    else:
        omega_coeffs = list(_parse_fractions(args.omega0))
    psi_coeffs = list(_parse_fractions(args.psi))
    report = check_eigenvalue_formula(
        flag, omega_coeffs, psi_coeffs, step=args.step, tol=args.tol
    )
    return {
        "exact": [_frac(v) for v in report.exact],
        "numeric": list(report.numeric),
        "max_deviation": report.max_deviation,
        "step": report.step,
        "tol": report.tol,
        "passed": report.passed,
    }


_HANDLERS = {
    "describe": _cmd_describe,
    "primitive-basis": _cmd_primitive_basis,
    "gauduchon": _cmd_gauduchon,
    "balanced": _cmd_balanced,
    "verify-numeric": _cmd_verify_numeric,
}


def _text_lines(value, prefix: str = "") -> list[str]:
    if isinstance(value, dict):
        lines = []
        for key in value:
            lines.extend(_text_lines(value[key], f"{prefix}.{key}" if prefix else str(key)))
        return lines
    if isinstance(value, list):
        lines = []
        for i, item in enumerate(value):
            lines.extend(_text_lines(item, f"{prefix}[{i}]"))
        return lines
    return [f"{prefix} = {value}"]


def _emit(report: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        for line in _text_lines(report):
            print(line)


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("family", choices=list("ABCDEFG"), help="simple Lie family")
    sub.add_argument("rank", type=int, help="rank of the family")
    sub.add_argument(
        "--parabolic",
        default="",
        help="comma-separated 1-based simple-root indices spanning the parabolic; empty for the full flag",
    )
    sub.add_argument("--format", choices=("text", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="flagcy", description=__doc__.splitlines()[0])
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("describe", help="invariant geometry of one flag variety")
    _add_common(p)

    p = subs.add_parser("primitive-basis", help="degree-zero Picard generators")
    _add_common(p)
    p.add_argument(
        "--omega0",
        default="anticanonical",
        help="Kahler class: comma-separated rationals over the Picard directions, or 'anticanonical'",
    )
    p.add_argument("--gamma", type=int, default=None, help="pivot simple-root index (1-based)")

    p = subs.add_parser("gauduchon", help="build and verify a Ricci-flat torus-bundle datum")
    _add_common(p)
    p.add_argument("--k", type=int, required=True, help="nonzero twist of the anticanonical root")
    p.add_argument("--t", required=True, help="connection parameter, a rational < 1")
    p.add_argument(
        "--bundle",
        action="append",
        default=[],
        help="degree-zero bundle exponents, e.g. --bundle=-1,1 (repeatable; need 2r-1 of them)",
    )
    p.add_argument(
        "--diagnostic",
        action="store_true",
        help="admit t >= 1 so the nonzero residual can be inspected",
    )

    p = subs.add_parser("balanced", help="build and verify a balanced torus-bundle datum")
    _add_common(p)
    p.add_argument("--omega0", default="anticanonical")
    p.add_argument(
        "--bundle",
        action="append",
        default=[],
        help="degree-zero bundle exponents (repeatable; need an even number)",
    )

    p = subs.add_parser(
        "verify-numeric", help="finite-difference eigenvalue check on a type-A big cell"
    )
    _add_common(p)
    p.add_argument("--omega0", default="anticanonical")
    p.add_argument("--psi", required=True, help="class coefficients, e.g. --psi=-1,1")
    p.add_argument("--step", type=float, default=1e-4)
    p.add_argument("--tol", type=float, default=1e-5)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _CliParseError as exc:
        print(f"flagcy: {exc}", file=sys.stderr)
        return 1

    report = {"command": args.command, "inputs": _inputs_echo(args)}
    try:
        results = _HANDLERS[args.command](args)
    except _CliParseError as exc:
        print(f"flagcy: {exc}", file=sys.stderr)
        return 1
    except FlagcyError as exc:
        report["results"] = {}
        report["status"] = "error"
        report["error"] = {"type": type(exc).__name__, "message": str(exc)}
        _emit(report, args.format)
        return 3 if isinstance(exc, UnsupportedType) else 2

    report["results"] = results
    report["status"] = "ok"
    _emit(report, args.format)
    if args.command == "verify-numeric" and not results["passed"]:
        return 2
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
