"""Command-line interface.

Subcommands: field, construct, verify, enumerate, table.  Exit status is 0
on success, 1 when a verification or permutation check fails, and 2 for
usage errors and violated preconditions.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .analyze import verify_construction, verify_poly
from .construct import (
    BIN,
    CYCLO,
    GEOM_SUM,
    TRI,
    construct_bin,
    construct_cyclotomic,
    construct_geom_sum,
    construct_tri,
)
from .cycletype import CycleType
from .errors import PermCycleError
from .families import (
    TABLE_COLUMNS,
    closed_form_count,
    enumerate_family,
    factor_pairs,
    family_r,
    reproduce_table,
    verify_stream,
)
from .field import FieldSpec, field_from_order, make_extension_field, make_prime_field
from .ntheory import euler_phi
from .poly import parse_poly

FAMILY_NAMES = {"bin": BIN, "tri": TRI, "cyclo": CYCLO, "geomsum": GEOM_SUM}


class UsageError(Exception):
    pass


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def _select_field(args: argparse.Namespace) -> FieldSpec:
    if args.q is not None:
        if args.p is not None or args.k is not None or args.modulus is not None:
            raise UsageError("give either --q or --p/--k [--modulus], not both")
        return field_from_order(args.q)
    if args.p is None:
        raise UsageError("a field is required: --q or --p [--k] [--modulus]")
    k = args.k if args.k is not None else 1
    modulus = None
    if args.modulus is not None:
        try:
            modulus = [int(c) for c in args.modulus.split(",")]
        except ValueError:
            raise UsageError(f"bad --modulus {args.modulus!r}; expected comma-separated integers") from None
    if k == 1 and modulus is None:
        return make_prime_field(args.p)
    return make_extension_field(args.p, k, modulus)


def _split_units(text: str) -> list[str]:
    """Split on commas outside brackets, so [1,2] stays one extension-field element."""
    out, depth, cur = [], 0, []
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "," and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return [s.strip() for s in out if s.strip()]


def _field_info(F: FieldSpec) -> dict:
    n = F.q - 1
    pairs = {BIN: [[m, d] for m, d in factor_pairs(F, 2)]}
    pairs[TRI] = [[m, d] for m, d in factor_pairs(F, 3)] if F.q % 3 == 1 else []
    return {
        "q": F.q,
        "p": F.p,
        "k": F.k,
        "modulus": list(F.modulus) if F.modulus else None,
        "modulus_text": F.modulus_text(),
        "generator": F.generator.value,
        "q_minus_1_factors": [list(pe) for pe in F.q_minus_1_factors],
        "divisors": [{"m": m, "d": n // m, "phi": euler_phi(m)} for m in F.divisors_of_order()],
        "pairs": pairs,
    }


def cmd_field(args: argparse.Namespace) -> int:
    F = _select_field(args)
    info = _field_info(F)
    if args.format == "json":
        _emit(info)
        return 0
    if args.format == "tsv":
        print("m\td\tphi")
        for row in info["divisors"]:
            print(f"{row['m']}\t{row['d']}\t{row['phi']}")
        return 0
    print(f"q = {F.q} (p = {F.p}, k = {F.k}), modulus {F.modulus_text()}")
    print(f"generator: {F.format_element(F.generator)} (encoding {F.generator.value})")
    print("divisors of q-1 (m, d, phi(m)):")
    for row in info["divisors"]:
        print(f"  {row['m']:>6} {row['d']:>6} {row['phi']:>6}")
    for fam, pairs in info["pairs"].items():
        print(f"{fam} (m, d): " + " ".join(f"({m},{d})" for m, d in pairs))
    return 0


def _build(F: FieldSpec, family: str, m: int, units, r: int | None):
    if family == BIN:
        if len(units) != 2:
            raise UsageError("bin takes exactly 2 units")
        return construct_bin(F, m, *units)
    if family == TRI:
        if len(units) != 3:
            raise UsageError("tri takes exactly 3 units")
        return construct_tri(F, m, *units)
    if family == GEOM_SUM:
        if len(units) != 2:
            raise UsageError("geomsum takes exactly 2 units")
        return construct_geom_sum(F, m, *units)
    return construct_cyclotomic(F, r if r is not None else len(units), m, units)


def cmd_construct(args: argparse.Namespace) -> int:
    F = _select_field(args)
    family = FAMILY_NAMES[args.family]
    units = [F.parse_element(s) for s in _split_units(args.units)]
    c = _build(F, family, args.m, units, args.r)
    out = c.to_json()
    status = 0
    if args.no_verify:
        out["verified"] = None
    else:
        report = verify_construction(c)
        out["verified"] = report.ok
        out["verification"] = report.to_json()
        if not report.ok:
            print(f"VERIFICATION FAILED for {c.poly}: {report.to_json()}", file=sys.stderr)
            status = 1
    _emit(out)
    return status


def cmd_verify(args: argparse.Namespace) -> int:
    F = _select_field(args)
    f = parse_poly(args.poly, F)
    expected = CycleType.parse(args.expect) if args.expect else None
    report = verify_poly(f, expected)
    out = {"poly": str(f), **report.to_json()}
    if args.format == "text":
        print(f"{f}: " + (f"permutation, cycle type {report.cycle_type}" if report.is_permutation
                          else "not a permutation"))
    else:
        _emit(out)
    return 0 if report.is_permutation and report.matches_predicted is not False else 1


def cmd_enumerate(args: argparse.Namespace) -> int:
    F = _select_field(args)
    family = FAMILY_NAMES[args.family]
    r = family_r(family, args.r)
    stream = enumerate_family(F, family, args.m, args.r, args.mixed)
    if args.no_verify:
        checked = ((c, None) for c in stream)
    else:
        checked = verify_stream(stream)
    count = 0
    failures = 0
    seen = set() if args.distinct else None
    for c, ok in checked:
        count += 1
        line = c.to_json()
        line["verified"] = ok
        if ok is False:
            failures += 1
        if seen is not None:
            seen.add(c.poly.terms)
        _emit(line)
    summary = {
        "family": family,
        "r": r if family != GEOM_SUM else (F.q - 1) // args.m,
        "m": args.m,
        "d": (F.q - 1) // args.m,
        "mixed": args.mixed,
        "count": count,
        "closed_form": closed_form_count(F, family, args.m, args.r, args.mixed),
        "verified": None if args.no_verify else failures == 0,
        "failures": None if args.no_verify else failures,
    }
    summary["agree"] = summary["count"] == summary["closed_form"]
    if seen is not None:
        summary["distinct"] = len(seen)
    _emit({"summary": summary})
    if failures:
        print(f"VERIFICATION FAILED for {failures} constructions", file=sys.stderr)
        return 1
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    F = _select_field(args)
    try:
        rows = reproduce_table(F, verify=not args.no_verify, distinct=args.distinct)
    except AssertionError as exc:
        print(f"VERIFICATION FAILED: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        _emit([row.to_json() for row in rows])
        return 0
    cols = list(TABLE_COLUMNS) + (["distinct"] if args.distinct else [])
    lines = ["\t".join(cols)] + ["\t".join(row.tsv_fields()) for row in rows]
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def _add_field_args(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("field selection")
    g.add_argument("--q", type=int, help="field order (odd prime power)")
    g.add_argument("--p", type=int, help="characteristic (odd prime)")
    g.add_argument("--k", type=int, help="extension degree")
    g.add_argument("--modulus", help="monic modulus coefficients a0,...,ak (least degree first)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permcycle", description="Permutation polynomials of prescribed cycle type over F_q."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field", help="show field parameters and valid (m, d) pairs")
    _add_field_args(p)
    p.add_argument("--format", choices=["json", "text", "tsv"], default="json")
    p.set_defaults(func=cmd_field)

    p = sub.add_parser("construct", help="build one construction")
    _add_field_args(p)
    p.add_argument("--family", choices=sorted(FAMILY_NAMES), required=True)
    p.add_argument("--m", type=int, required=True, help="order of the subgroup H_0")
    p.add_argument("--units", required=True, help="comma-separated units: n, enc:N, [a0,a1], g^e")
    p.add_argument("--r", type=int, help="number of coset classes (cyclo only)")
    p.add_argument("--no-verify", action="store_true")
    p.add_argument("--format", choices=["json"], default="json")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check whether a polynomial permutes F_q")
    _add_field_args(p)
    p.add_argument("--poly", required=True)
    p.add_argument("--expect", help="expected cycle type, e.g. 1+3^4")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="stream every member of a family as JSON lines")
    _add_field_args(p)
    p.add_argument("--family", choices=sorted(FAMILY_NAMES), required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", type=int, help="number of coset classes (cyclo only)")
    p.add_argument("--mixed", action="store_true", help="draw units from all of H_0, not just order m")
    p.add_argument("--no-verify", action="store_true")
    p.add_argument("--distinct", action="store_true", help="also count distinct polynomials")
    p.add_argument("--format", choices=["json"], default="json")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("table", help="binomial/trinomial family table with counts")
    _add_field_args(p)
    p.add_argument("--verify-all", action="store_true", help="oracle-check every member (default)")
    p.add_argument("--no-verify", action="store_true", help="skip member verification")
    p.add_argument("--distinct", action="store_true", help="add a distinct-polynomial column")
    p.add_argument("--format", choices=["tsv", "json"], default="tsv")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "verify_all", False) and args.no_verify:
        parser.error("--verify-all and --no-verify are mutually exclusive")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"permcycle: error: {exc}", file=sys.stderr)
        return 2
    except PermCycleError as exc:
        print(f"permcycle: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
