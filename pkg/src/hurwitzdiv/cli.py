"""Command-line front end.

Subcommands:

* ``class``: emit one divisor class in json, csv or md.
* ``verify``: run the named identity checks over a range of k.
* ``slope``: induced and ample-class slopes with validity status.
* ``m0n``: boundary combinatorics of pointed rational curves.
* ``table``: per-k tables (genus data, slopes, coefficients).

Exit codes: 0 on success, 1 when a verification check fails, 2 for
usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import checks as checks_mod
from . import m0b, pushforward, serialize, slopes, trace
from .bases import ClassGroupError, DivisorClass, T2, T3j
from .core import format_rational, parse_rational
from .m0b import MarkedSetError
from .pushforward import PER_FACTORIAL_B, RAW
from .slopes import SlopeError, VerificationError

_PUSHFORWARD_CLASSES = {
    "p-phi-lambda": pushforward.p_phi_lambda,
    "p-phihat-lambda": pushforward.p_phihat_lambda,
    "p-q-kappa": pushforward.p_q_kappa,
    "eh-divisor": pushforward.eh_divisor,
}

_HURWITZ_CLASSES = {
    "delta-tau": trace.delta_tau,
    "omega-tau-sq": trace.omega_tau_sq,
    "delta-s": trace.delta_s,
    "s-omega-sq": trace.s_omega_sq,
    "phi-lambda": trace.phi_pull_lambda,
    "phihat-lambda": trace.phihat_pull_lambda,
    "prym-hodge": pushforward.prym_hodge_class,
    "prym-boundary": pushforward.prym_boundary_class,
}

class UsageError(ValueError):
    """Bad input that should exit with code 2."""


def _resolve_class(name: str, k: int, normalized: bool) -> tuple[DivisorClass, str]:
    """Return the requested class and the normalization label to emit."""
    base, _, arg = name.partition(":")
    if name in _HURWITZ_CLASSES or base in ("phi-delta", "phihat-delta", "q-T2", "q-T3j"):
        if normalized:
            raise UsageError(
                f"--normalized only applies to push-forward classes, not {name!r}"
            )
    if name in _HURWITZ_CLASSES:
        return _HURWITZ_CLASSES[name](k), RAW
    if name in _PUSHFORWARD_CLASSES:
        mode = PER_FACTORIAL_B if normalized else RAW
        return _PUSHFORWARD_CLASSES[name](k, mode), mode
    if base in ("phi-delta", "phihat-delta", "q-T3j"):
        if not arg.lstrip("-").isdigit():
            raise UsageError(f"class {name!r} needs an integer index after ':'")
        index = int(arg)
        if base == "phi-delta":
            return trace.phi_pull_boundary(k, index), RAW
        if base == "phihat-delta":
            return trace.phihat_pull_boundary(k, index), RAW
        return trace.q_pullback(k).row(T3j(index)), RAW
    if name == "q-T2":
        return trace.q_pullback(k).row(T2), RAW
    raise UsageError(f"unknown class name {name!r}")


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)


def _cmd_class(args) -> int:
    d, mode = _resolve_class(args.name, args.k, args.normalized)
    if args.format == "json":
        text = serialize.class_to_json(d, mode)
    elif args.format == "csv":
        text = serialize.class_to_csv(d)
    else:
        text = serialize.class_to_md(d)
    _emit(text, args.out)
    return 0


def _cmd_verify(args) -> int:
    externals = serialize.load_externals(args.externals) if args.externals else None
    names = [n.strip() for n in args.checks.split(",")] if args.checks else None
    if names == ["all"]:
        names = None
    results = checks_mod.run_checks(args.k_min, args.k_max, names, externals)
    lines = []
    for r in results:
        line = f"k={r.k:<3d} {r.check:<20s} {r.status}"
        if r.detail:
            line += f"  {r.detail}"
        lines.append(line)
    passed = sum(1 for r in results if r.status == checks_mod.PASS)
    failed = sum(1 for r in results if r.status == checks_mod.FAIL)
    skipped = sum(1 for r in results if r.status == checks_mod.SKIP)
    lines.append(f"summary: {passed} passed, {failed} failed, {skipped} skipped")
    _emit("\n".join(lines) + "\n", args.out)
    return 1 if failed else 0


def _boundary_sum_pushed(k: int, reduced: bool) -> DivisorClass:
    images = [
        (pushforward.p_phihat_delta if reduced else pushforward.p_phi_delta)(
            k, j, PER_FACTORIAL_B
        )
        for j in range(k + 1)
    ]
    total = images[0]
    for image in images[1:]:
        total = total + image
    return total


def _cmd_slope(args) -> int:
    externals = serialize.load_externals(args.externals) if args.externals else None
    k = args.k
    induced = None
    if args.variant == "kappa":
        target = pushforward.p_q_kappa(k, PER_FACTORIAL_B)
        slopes.kappa_slope_bound(k)
    else:
        if args.s_prime is None:
            raise UsageError(f"--s-prime is required for variant {args.variant!r}")
        s = parse_rational(args.s_prime)
        reduced = args.variant == "reduced"
        hodge = (
            pushforward.p_phihat_lambda(k)
            if reduced
            else pushforward.p_phi_lambda(k)
        )
        target = hodge * s - _boundary_sum_pushed(k, reduced)
        induced = (
            slopes.induced_slope_reduced(k, s)
            if reduced
            else slopes.induced_slope_trace(k, s)
        )
    if externals is not None:
        target = externals.apply(target)
    report = slopes.slope_of(target)
    if induced is not None and report.slope != induced:
        raise VerificationError(
            f"slope {report.slope} differs from the induced-slope value {induced}"
        )
    text = (
        f"{format_rational(report.slope)} "
        f"≈ {serialize.decimal_approx(report.slope)} "
        f"validity={report.valid.lower()}\n"
    )
    _emit(text, args.out)
    return 0


def _parse_set(text: str) -> set[int]:
    try:
        return {int(piece) for piece in text.split(",") if piece != ""}
    except ValueError as exc:
        raise UsageError(f"malformed marked set {text!r}") from exc


def _cmd_m0n(args) -> int:
    b = args.b
    op = args.op
    sets = args.sets
    if op == "count":
        if sets:
            raise UsageError("count takes no set arguments")
        text = f"{m0b.count_boundary(b)}\n"
    elif op == "normalize":
        if len(sets) != 1:
            raise UsageError("normalize takes exactly one set argument")
        text = f"{m0b.normalize(b, _parse_set(sets[0]))}\n"
    else:
        if len(sets) != 2:
            raise UsageError("intersect takes exactly two set arguments")
        first = m0b.normalize(b, _parse_set(sets[0]))
        second = m0b.normalize(b, _parse_set(sets[1]))
        text = ("nonempty" if m0b.intersect_nonempty(first, second) else "empty") + "\n"
    _emit(text, args.out)
    return 0


def _table_rows(args) -> tuple[list[str], list[list[str]]]:
    quantity = args.quantity
    k_range = range(args.k_min, args.k_max + 1)
    if quantity == "genus":
        columns = ["k", "g", "d", "b", "g_prime", "g_hat", "prym_dim"]
        rows = []
        for k in k_range:
            gd = trace.genus_data(k)
            rows.append(
                [str(v) for v in (gd.k, gd.g, gd.d, gd.b, gd.g_prime, gd.g_hat, gd.prym_dim)]
            )
        return columns, rows
    if quantity == "kappa-slope":
        columns = ["k", "slope"]
        return columns, [
            [str(k), format_rational(slopes.kappa_slope_bound(k))] for k in k_range
        ]
    if quantity == "slope-bound":
        columns = ["k", "trace_slope_s11", "reduced_slope_s11", "bound_6_20_g"]
        rows = []
        for k in k_range:
            if k < 3:
                continue
            rows.append(
                [
                    str(k),
                    format_rational(slopes.induced_slope_trace(k, Fraction(11))),
                    format_rational(slopes.induced_slope_reduced(k, Fraction(11))),
                    format_rational(6 + Fraction(20, 2 * k)),
                ]
            )
        return columns, rows
    if quantity.startswith("coefficients:"):
        name = quantity.split(":", 1)[1]
        columns = ["k", "generator", "coefficient"]
        rows = []
        for k in k_range:
            d, _ = _resolve_class(name, k, args.normalized)
            for gen, value in d.items():
                rows.append([str(k), gen, str(value)])
        return columns, rows
    raise UsageError(f"unknown table quantity {quantity!r}")


def _cmd_table(args) -> int:
    if args.normalized and not args.quantity.startswith("coefficients:"):
        raise UsageError("--normalized only applies to coefficients tables")
    columns, rows = _table_rows(args)
    if args.format == "json":
        text = serialize.table_to_json(columns, rows)
    elif args.format == "csv":
        text = serialize.table_to_csv(columns, rows)
    else:
        text = serialize.table_to_md(columns, rows)
    _emit(text, args.out)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hurwitzdiv",
        description=(
            "Exact divisor-class calculus for the correspondences that trace "
            "curves of pencils induce between Hurwitz spaces and moduli of "
            "curves."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_class = sub.add_parser(
        "class",
        help="emit one divisor class",
        description=(
            "Emit one divisor class.  Names: "
            "delta-tau, omega-tau-sq, delta-s, s-omega-sq, phi-lambda, "
            "phihat-lambda, phi-delta:<j>, phihat-delta:<j>, q-T2, q-T3j:<j>, "
            "p-phi-lambda, p-phihat-lambda, p-q-kappa, eh-divisor, prym-hodge, "
            "prym-boundary.  Push-forward classes are emitted raw (carrying "
            "the (6k)! labelling factor) unless --normalized is given.  CSV "
            "rows are generator,coefficient in natural basis order without a "
            "header; JSON objects are key-sorted."
        ),
    )
    p_class.add_argument("name")
    p_class.add_argument("--k", type=int, required=True)
    p_class.add_argument("--format", choices=("json", "csv", "md"), default="json")
    p_class.add_argument("--normalized", action="store_true")
    p_class.add_argument("--out", default=None)
    p_class.set_defaults(func=_cmd_class)

    p_verify = sub.add_parser(
        "verify",
        help="run identity checks over a range of k",
        description=(
            "Run the named checks for every k in the range.  Check names: "
            + ", ".join(checks_mod.CHECKS)
            + ", or 'all'.  Checks needing the external coefficient table "
            "are SKIPped unless --externals is given.  Exit code 1 when any "
            "check fails."
        ),
    )
    p_verify.add_argument("--k-min", type=int, required=True)
    p_verify.add_argument("--k-max", type=int, required=True)
    p_verify.add_argument("--checks", default=None, help="comma-separated list")
    p_verify.add_argument("--externals", default=None)
    p_verify.add_argument("--out", default=None)
    p_verify.set_defaults(func=_cmd_verify)

    p_slope = sub.add_parser(
        "slope",
        help="induced and ample-class slopes",
        description=(
            "Print the exact slope, a 6-place decimal approximation, and the "
            "validity of the proviso that delta_0 realizes the minimal "
            "boundary coefficient (unknown while the delta_j coefficients "
            "stay symbolic)."
        ),
    )
    p_slope.add_argument("--k", type=int, required=True)
    p_slope.add_argument("--s-prime", default=None, help='source slope "p/q"')
    p_slope.add_argument(
        "--variant", choices=("trace", "reduced", "kappa"), required=True
    )
    p_slope.add_argument("--externals", default=None)
    p_slope.add_argument("--out", default=None)
    p_slope.set_defaults(func=_cmd_slope)

    p_m0n = sub.add_parser(
        "m0n",
        help="boundary combinatorics of pointed rational curves",
        description=(
            "Operations: count; normalize SET; intersect SET SET.  Sets are "
            "comma-separated integers, e.g. 4,5."
        ),
    )
    p_m0n.add_argument("--b", type=int, required=True)
    p_m0n.add_argument("op", choices=("count", "normalize", "intersect"))
    p_m0n.add_argument("sets", nargs="*")
    p_m0n.add_argument("--out", default=None)
    p_m0n.set_defaults(func=_cmd_m0n)

    p_table = sub.add_parser(
        "table",
        help="per-k tables",
        description=(
            "Quantities: genus (columns k,g,d,b,g_prime,g_hat,prym_dim); "
            "kappa-slope (columns k,slope); slope-bound (columns "
            "k,trace_slope_s11,reduced_slope_s11,bound_6_20_g; rows start at "
            "k=3); coefficients:<class-name> (columns k,generator,"
            "coefficient).  Rows are ordered by k, then by natural generator "
            "order."
        ),
    )
    p_table.add_argument("--quantity", required=True)
    p_table.add_argument("--k-min", type=int, required=True)
    p_table.add_argument("--k-max", type=int, required=True)
    p_table.add_argument("--format", choices=("json", "csv", "md"), default="json")
    p_table.add_argument("--normalized", action="store_true")
    p_table.add_argument("--out", default=None)
    p_table.set_defaults(func=_cmd_table)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except VerificationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (
        UsageError,
        ClassGroupError,
        MarkedSetError,
        SlopeError,
        ValueError,
        ZeroDivisionError,
        OSError,
        json.JSONDecodeError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
