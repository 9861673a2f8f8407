"""Command line front end.

Three subcommands over the same inputs (a JSON instance document or a
catalog entry):

* ``verify``     compute the invariant count, the reduced count with its
                 corrections, and the oracle character count, and compare;
* ``character``  print the character as an exact Laurent polynomial;
* ``residues``   print the per-component, per-pole residue table.

Exit status: 0 on PASS or NOT-ASSERTED, 1 on FAIL, 2 on input errors,
3 on internal computation errors.  All numbers are printed exactly;
``--decimal`` adds clearly marked approximations.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .catalog import UnknownCatalogError, catalog, catalog_names, is_parametric
from .exactnum import Cyclotomic, NotRationalError
from .fixedpoint import (
    InvalidInstanceError,
    SchemaError,
    has_errors,
    load_instance,
    tensor_power,
    validate,
)
from .lefschetz import NonIntegerResultError
from .oracle import StabilizationError, SymmetryError, character_polynomial
from .reduction import Report, residue_table, verify_quantization

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_COMPUTE = 3


def scalar_str(x, decimal=False) -> str:
    if isinstance(x, Cyclotomic):
        if x.is_rational():
            return scalar_str(x.rational_part(), decimal)
        body = f"{x} (z = primitive {x.conductor}th root of unity)"
        if decimal:
            z = complex(x)
            body += f" ~ {z.real:.6g}{z.imag:+.6g}i"
        return body
    x = Fraction(x)
    body = str(x)
    if decimal and x.denominator != 1:
        body += f" ~ {float(x):.6g}"
    return body


def scalar_json(x):
    if isinstance(x, Cyclotomic) and not x.is_rational():
        return {
            "conductor": x.conductor,
            "coeffs": [str(c) for c in x.coeffs],
            "str": str(x),
        }
    if isinstance(x, Cyclotomic):
        x = x.rational_part()
    return str(Fraction(x))


def _add_common(sub):
    sub.add_argument("input", nargs="?", help="path to a JSON instance document")
    sub.add_argument(
        "--catalog",
        metavar="NAME",
        help="built-in instance (%s)" % ", ".join(catalog_names()),
    )
    sub.add_argument(
        "--k",
        type=int,
        default=None,
        metavar="INT",
        help="bundle power: selects k for parametrized catalog entries, "
        "applies a tensor power to fixed entries and file inputs",
    )
    sub.add_argument(
        "--degree-bound",
        type=int,
        default=None,
        metavar="INT",
        help="raise the character expansion bound (never lowers the "
        "automatic bound)",
    )
    sub.add_argument("--json", action="store_true", help="machine-readable output")
    sub.add_argument(
        "--decimal",
        action="store_true",
        help="append decimal approximations (clearly marked) to exact values",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quantred",
        description="Exact residue check that the invariant section count "
        "of circle-equivariant fixed-point data equals the reduced-space "
        "count with its orbifold corrections.",
    )
    subs = parser.add_subparsers(dest="command", required=True)
    for name, doc in (
        ("verify", "compute both sides and the oracle, compare"),
        ("character", "print the character Laurent polynomial"),
        ("residues", "print the per-component per-pole residue table"),
    ):
        sub = subs.add_parser(name, help=doc)
        _add_common(sub)
    return parser


def resolve_instance(args):
    if bool(args.input) == bool(args.catalog):
        raise SchemaError("provide exactly one of an input path or --catalog NAME")
    if args.catalog:
        if is_parametric(args.catalog):
            p = catalog(args.catalog, args.k)
            return p
        p = catalog(args.catalog)
    else:
        p = load_instance(args.input)
    if args.k is not None:
        p = tensor_power(p, args.k)
    return p


def _print_findings(findings, out):
    for f in findings:
        print(f"  {f}", file=out)


def _findings_json(findings):
    return [
        {"level": f.level, "code": f.code, "message": f.message,
         "component": f.component}
        for f in findings
    ]


def report_to_json(report: Report) -> dict:
    reduced = report.reduced
    return {
        "instance": {
            "name": report.instance_name,
            "group": report.group,
            "components": report.n_components,
            "conductor": report.conductor,
            "dimension": report.dimension,
        },
        "findings": _findings_json(report.findings),
        "hypotheses_ok": report.hypotheses_ok,
        "lefschetz": scalar_json(report.lefschetz),
        "reduction": {
            "main": scalar_json(reduced.main),
            "corrections": {str(d): scalar_json(v) for d, v in reduced.corrections.items()},
            "residues_by_exponent": {
                str(k): scalar_json(v) for k, v in reduced.residues_by_exponent.items()
            },
            "total": scalar_json(reduced.total),
        },
        "oracle": scalar_json(Fraction(report.oracle)),
        "character": {str(m): c for m, c in sorted(report.character.coefficients.items())},
        "residues": [
            {
                "component": row.component,
                "values": {label: scalar_json(v) for label, v in row.entries},
                "sum": scalar_json(row.total),
            }
            for row in report.residue_table
        ],
        "verdict": report.verdict,
        "timings": report.timings,
    }


def cmd_verify(args) -> int:
    p = resolve_instance(args)
    findings = validate(p)
    if has_errors(findings):
        print("invalid instance:", file=sys.stderr)
        _print_findings(findings, sys.stderr)
        return EXIT_INPUT
    report = verify_quantization(p, args.degree_bound)
    if args.json:
        print(json.dumps(report_to_json(report), indent=2))
    else:
        dec = args.decimal
        print(f"instance   : {report.instance_name}  "
              f"(group {report.group}, {report.n_components} components, "
              f"conductor {report.conductor}, dim M = {report.dimension})")
        if report.findings:
            print("validation :")
            _print_findings(report.findings, sys.stdout)
        else:
            print("validation : clean")
        print(f"character  : {report.character}")
        print(f"invariant  : {scalar_str(report.lefschetz, dec)}")
        corr = ", ".join(
            f"order {d}: {scalar_str(v, dec)}"
            for d, v in report.reduced.corrections.items()
        ) or "none"
        print(f"reduced    : main {scalar_str(report.reduced.main, dec)}, "
              f"corrections {corr}, total {scalar_str(report.reduced.total, dec)}")
        print(f"oracle     : {report.oracle}")
        print(f"verdict    : {report.verdict}")
    return EXIT_OK if report.verdict in ("PASS", "NOT-ASSERTED") else EXIT_FAIL


def cmd_character(args) -> int:
    p = resolve_instance(args)
    character = character_polynomial(p, args.degree_bound)
    if args.json:
        print(json.dumps({
            "instance": p.name,
            "coefficients": {str(m): c for m, c in sorted(character.coefficients.items())},
            "str": str(character),
        }, indent=2))
    else:
        print(character)
    return EXIT_OK


def _column_sums(rows):
    sums = []
    for i in range(len(rows[0].entries)):
        total = Fraction(0)
        for row in rows:
            total = total + row.entries[i][1]
        sums.append(total)
    return sums


def cmd_residues(args) -> int:
    p = resolve_instance(args)
    findings = validate(p)
    if has_errors(findings):
        print("invalid instance:", file=sys.stderr)
        _print_findings(findings, sys.stderr)
        return EXIT_INPUT
    rows = residue_table(p)
    col_sums = _column_sums(rows)
    grand = sum((row.total for row in rows), Fraction(0))
    if args.json:
        print(json.dumps({
            "instance": p.name,
            "rows": [
                {
                    "component": row.component,
                    "values": {label: scalar_json(v) for label, v in row.entries},
                    "sum": scalar_json(row.total),
                }
                for row in rows
            ],
            "column_sums": {
                label: scalar_json(v)
                for (label, _), v in zip(rows[0].entries, col_sums)
            },
        }, indent=2))
        return EXIT_OK
    labels = rows[0].labels() if rows else []
    headers = ["component"] + labels + ["sum"]
    body = []
    for row in rows:
        body.append(
            [row.component]
            + [scalar_str(v, args.decimal) for _, v in row.entries]
            + [scalar_str(row.total, args.decimal)]
        )
    body.append(
        ["(total)"]
        + [scalar_str(v, args.decimal) for v in col_sums]
        + [scalar_str(grand, args.decimal)]
    )
    widths = [
        max(len(headers[i]), *(len(r[i]) for r in body)) if body else len(headers[i])
        for i in range(len(headers))
    ]
    print("  ".join(h.ljust(w) for h, w in zip(headers, widths)))
    for r in body:
        print("  ".join(v.ljust(w) for v, w in zip(r, widths)))
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "character":
            return cmd_character(args)
        return cmd_residues(args)
    except (SchemaError, UnknownCatalogError, FileNotFoundError, InvalidInstanceError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (StabilizationError, SymmetryError, NonIntegerResultError,
            NotRationalError, ArithmeticError) as exc:
        print(f"computation error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
