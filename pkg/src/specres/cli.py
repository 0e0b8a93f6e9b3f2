"""Command line interface: ``specres residues|invert-residues|darboux|verify|compsum``.

Exit codes: 0 success, 1 verification failure, 2 bad input, 3 order guard exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from contextlib import nullcontext

from . import solvable
from .darboux import darboux_transform, prepotential_from_potential
from .polynomial import MPoly
from .scalars import scalar_from_str, scalar_to_str
from .series import SchemaError, Series, format_part, series_from_json, series_to_json
from .suites import DEFAULT_ORDERS, FREE_SUITES, SUITES
from .transforms import potential_from_residues, residues_from_potential

GUARD_COMMUTATIVE = 14
GUARD_FREE = 10
ENV_GUARD = "SPECRES_MAX_ORDER"

FAMILY_CHOICES = ("free",) + solvable.FAMILIES
FAMILY_PARAMS = ("u", "v")


class UsageError(Exception):
    """Bad input; reported on stderr with exit code 2."""


class GuardError(Exception):
    """Requested order above the configured guard; exit code 3."""


def _guard(free):
    env = os.environ.get(ENV_GUARD)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"{ENV_GUARD} must be an integer, got {env!r}") from None
    return GUARD_FREE if free else GUARD_COMMUTATIVE


def _check_order(order, free):
    if order < 1:
        raise UsageError("order must be at least 1")
    limit = _guard(free)
    if order > limit:
        kind = "free-algebra" if free else "commutative"
        raise GuardError(f"order {order} exceeds the {kind} guard {limit} (set {ENV_GUARD} to raise it)")


def _parse_params(items):
    out = {}
    for item in items or ():
        name, sep, value = item.partition("=")
        name = name.strip()
        if not sep or name not in FAMILY_PARAMS:
            raise UsageError(f"bad --params entry {item!r}; expected u=<rational> or v=<rational>")
        try:
            out[name] = scalar_from_str(value)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    return out


def _read_json(stream):
    text = stream.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def _family_series(family, order, params):
    if family == "free":
        if params:
            raise UsageError("--params does not apply to the free family")
        return Series.free(order)
    U = solvable.family_potential(family, order)
    return U.map_coeffs(lambda c: c.subs(params)) if params else U


def _coeff_text(c):
    return scalar_to_str(c) if not isinstance(c, MPoly) or c.is_constant() else str(c)


def _emit_table(rows, fmt, out):
    """``rows`` is a list of ``(n, text, payload)``."""
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["n", "residue"])
        for n, text, _ in rows:
            w.writerow([n, text])
    else:
        for n, text, _ in rows:
            out.write(f"rho_{n} = {text}\n")


def cmd_residues(args, out):
    family = args.family
    free = family == "free"
    _check_order(args.order, free)
    params = _parse_params(args.params)
    if free:
        rho = residues_from_potential(Series.free(args.order))
        if args.format == "json":
            json.dump(dict(series_to_json(rho), family=family), out, indent=2)
            out.write("\n")
            return 0
        rows = [(n, format_part(rho.grade(n)), None) for n in range(1, args.order + 1)]
    else:
        rows = []
        for n in range(1, args.order + 1):
            poly = solvable.residue_polynomial(family, n)
            if params:
                poly = poly.subs(params)
            rows.append((n, _coeff_text(poly), poly))
        if args.format == "json":
            payload = {
                "family": family,
                "order": args.order,
                "params": {k: scalar_to_str(v) for k, v in sorted(params.items())},
                "residues": [{"n": n, "rho": text} for n, text, _ in rows],
            }
            json.dump(payload, out, indent=2)
            out.write("\n")
            return 0
    _emit_table(rows, args.format, out)
    return 0


def _residues_from_input(obj):
    if isinstance(obj, dict) and "rho" in obj:
        values = obj["rho"]
        if not isinstance(values, list) or not values:
            raise UsageError("$.rho: expected a nonempty array of 'num/den' strings")
        coeffs = []
        for i, text in enumerate(values):
            try:
                coeffs.append(scalar_from_str(text))
            except ValueError as exc:
                raise UsageError(f"$.rho[{i}]: {exc}") from None
        return Series.scalar(len(coeffs), coeffs)
    try:
        return series_from_json(obj)
    except SchemaError as exc:
        raise UsageError(str(exc)) from None


def cmd_invert(args, out, stdin):
    rho = _residues_from_input(_read_json(stdin))
    if rho.grade(0):
        raise UsageError("residue sequence must have zero constant term")
    order = rho.order if args.order is None else args.order
    if order > rho.order:
        raise UsageError(f"--order {order} exceeds the input truncation order {rho.order}")
    free = any(w for (_, w), _c in rho.items()) and not rho.commutative
    _check_order(order, free)
    U = potential_from_residues(rho.truncate(order))
    _emit_series({"U": U}, args.format, out)
    return 0


def _emit_series(named, fmt, out):
    if fmt == "json":
        json.dump({k: series_to_json(s) for k, s in named.items()}, out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["series", "grade", "word", "coeff"])
        for name, s in named.items():
            for (g, word), c in s.items():
                w.writerow([name, g, " ".join(map(str, word)), _coeff_text(c)])
    else:
        for name, s in named.items():
            out.write(f"{name} = {s}\n")


def cmd_darboux(args, out, stdin):
    if args.input is not None:
        stream = nullcontext(stdin) if args.input == "-" else open(args.input, encoding="utf-8")
        with stream as fh:
            try:
                U = series_from_json(_read_json(fh))
            except SchemaError as exc:
                raise UsageError(str(exc)) from None
        if args.order is not None:
            U = U.truncate(min(args.order, U.order))
        free = any(w for (_, w), _c in U.items()) and not U.commutative
        _check_order(U.order, free)
    else:
        order = 3 if args.order is None else args.order
        _check_order(order, args.family == "free")
        U = _family_series(args.family, order, _parse_params(args.params))
    if U.grade(0):
        raise UsageError("potential must have zero constant term")
    W = prepotential_from_potential(U)
    tilde = darboux_transform(U)
    rho = residues_from_potential(U)
    rho_tilde = residues_from_potential(tilde)
    ok = rho_tilde == -rho
    _emit_series({"U": U, "W": W, "U_tilde": tilde, "rho": rho, "minus_rho": -rho}, args.format, out)
    if not ok:
        sys.stderr.write("residues of the partner potential are not the negated residues\n")
        return 1
    return 0


def cmd_verify(args, out):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    reports = []
    for name in names:
        N = DEFAULT_ORDERS[name] if args.max_order is None else args.max_order
        if args.suite == "all" and args.max_order is not None:
            N = min(N, args.max_order)
        _check_order(N, name in FREE_SUITES)
        reports.append(SUITES[name](N))
    passed = all(r.passed for r in reports)
    if args.format == "json":
        payload = reports[0].to_json() if len(reports) == 1 else {
            "suite": "all",
            "status": "pass" if passed else "fail",
            "suites": [r.to_json() for r in reports],
        }
        json.dump(payload, out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["suite", "case", "order", "status", "detail"])
        for r in reports:
            for c in r.cases:
                w.writerow([r.suite, c.case, c.order, "pass" if c.passed else "fail", c.detail])
    else:
        for r in reports:
            for key, value in r.notes.items():
                out.write(f"{r.suite}: {key} = {json.dumps(value)}\n")
            for c in r.cases:
                line = f"{r.suite} {c.case} n={c.order}: {'pass' if c.passed else 'FAIL'}"
                out.write(line + (f" ({c.detail})" if c.detail else "") + "\n")
            out.write(f"{r.suite}: {'pass' if r.passed else 'FAIL'}\n")
    return 0 if passed else 1


def cmd_compsum(args, out):
    _check_order(args.n, False)
    try:
        lhs = solvable.composition_sum(args.id, args.n, args.k)
        rhs = solvable.product_coefficient(args.id, args.n, args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        json.dump({
            "id": args.id, "n": args.n, "k": args.k,
            "composition_sum": scalar_to_str(lhs),
            "product_coefficient": scalar_to_str(rhs),
            "equal": lhs == rhs,
        }, out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["id", "n", "k", "composition_sum", "product_coefficient"])
        w.writerow([args.id, args.n, args.k, scalar_to_str(lhs), scalar_to_str(rhs)])
    else:
        out.write(f"{lhs}\n")
        if lhs != rhs:
            out.write(f"product coefficient {rhs} differs\n")
    return 0 if lhs == rhs else 1


def build_parser():
    parser = argparse.ArgumentParser(prog="specres", description="Exact spectral residue computations.")
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p, default):
        p.add_argument("--format", choices=("json", "csv", "pretty"), default=default)

    p = sub.add_parser("residues", help="table of spectral residues of a potential family")
    p.add_argument("--family", choices=FAMILY_CHOICES, default="free")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--params", nargs="*", metavar="NAME=VALUE", help="specialize u and/or v")
    fmt(p, "pretty")

    p = sub.add_parser("invert-residues", help="potential from a residue sequence read on stdin")
    p.add_argument("--order", type=int)
    fmt(p, "json")

    p = sub.add_parser("darboux", help="partner potential, prepotential and residues")
    p.add_argument("--family", choices=FAMILY_CHOICES, default="free")
    p.add_argument("--order", type=int)
    p.add_argument("--params", nargs="*", metavar="NAME=VALUE")
    p.add_argument("--input", metavar="FILE", help="read the potential as series JSON ('-' for stdin)")
    fmt(p, "json")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=tuple(SUITES) + ("all",), required=True)
    p.add_argument("--max-order", type=int)
    fmt(p, "pretty")

    p = sub.add_parser("compsum", help="evaluate a corollary composition sum")
    p.add_argument("--id", required=True, choices=solvable.COROLLARIES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    fmt(p, "pretty")
    return parser


def main(argv=None, stdin=None, stdout=None):
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    buf = io.StringIO()
    try:
        if args.command == "residues":
            code = cmd_residues(args, buf)
        elif args.command == "invert-residues":
            code = cmd_invert(args, buf, stdin)
        elif args.command == "darboux":
            code = cmd_darboux(args, buf, stdin)
        elif args.command == "verify":
            code = cmd_verify(args, buf)
        else:
            code = cmd_compsum(args, buf)
    except UsageError as exc:
        sys.stderr.write(f"specres: error: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"specres: error: {exc}\n")
        return 2
    except GuardError as exc:
        sys.stderr.write(f"specres: {exc}\n")
        return 3
    stdout.write(buf.getvalue())
    return code


if __name__ == "__main__":
    sys.exit(main())
