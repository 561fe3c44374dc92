"""Command line surface.

Exit codes: 0 success / equivalent / constant rank; 1 distinguished,
non-constant or golden mismatch; 2 input error; 3 engine error;
4 inconclusive window.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .engine import BigradedTable, aggregate_contributions, compute_table, hh2_vanishes, list_contributions
from .errors import EngineError, GoldenMismatch, InputError, MfhhError, UnknownFamily, WindowMismatch
from .invariants import FAMILY_NAMES, golden_check, scale_compare, small_res_probe
from .poly import parse
from .symmetry import SymmetryContext

EXIT_OK = 0
EXIT_VERDICT = 1
EXIT_INPUT = 2
EXIT_ENGINE = 3
EXIT_INCONCLUSIVE = 4


def _document(p, ctx, table, contributions=None):
    w = p.weights()
    doc = {
        "schema": "v1",
        "tool_version": __version__,
        "poly": p.to_json(),
        "transpose": p.transpose().to_json(),
        "weights": {"d": list(w.d), "h": w.h, "d0": w.d0},
        "ker_chi_order": abs(p.det()),
        "hh2_vanishes": hh2_vanishes(p, ctx=ctx),
        "window": [table.dmin, table.dmax],
        "cells": table.cell_list(),
    }
    if contributions is not None:
        doc["contributions"] = contributions
    return doc


def _emit_json(doc, out):
    out.write(json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False))
    out.write("\n")


def _emit_csv(table, out):
    out.write("degree,weight,dim\n")
    for cell in table.cell_list():
        out.write(f"{cell['d']},{cell['q']},{cell['dim']}\n")


def _emit_pretty(doc, table, out):
    out.write(f"polynomial : {_poly_text(doc['poly'])}\n")
    out.write(f"transpose  : {_poly_text(doc['transpose'])}\n")
    w = doc["weights"]
    out.write(
        f"weights    : d={tuple(w['d'])} h={w['h']} d0={w['d0']}"
        f"   |ker chi|={doc['ker_chi_order']}"
        f"   HH^2 vanishes: {doc['hh2_vanishes']}\n"
    )
    out.write(f"window     : [{table.dmin}, {table.dmax}]\n")
    qs = sorted({q for (_, q) in table.cells})
    if not qs:
        out.write("(table is empty on this window)\n")
        return
    head = "deg |" + "".join(f"{q:>5}" for q in qs) + " | total"
    out.write(head + "\n")
    out.write("-" * len(head) + "\n")
    for d in range(table.dmax, table.dmin - 1, -1):
        row = [table.cells.get((d, q), 0) for q in qs]
        if not any(row):
            continue
        cells = "".join(f"{v if v else '.':>5}" for v in row)
        out.write(f"{d:>3} |{cells} | {sum(row):>5}\n")
    if doc.get("contributions"):
        out.write("\ncontributions (monomial, type, degree, weight, count):\n")
        for r in doc["contributions"]:
            out.write(
                f"  {r['monomial']}  {r['type']}  d={r['d']}  q={r['q']}  x{r['count']}\n"
            )


def _poly_text(obj):
    from .poly import InvertiblePolynomial

    return str(InvertiblePolynomial.from_json(obj, validate=False))


def _load_document(path):
    from .errors import SchemaError

    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise SchemaError(f"cannot read table document {path}: {exc}") from exc
    if not isinstance(doc, dict) or doc.get("schema") != "v1":
        raise SchemaError(f"{path}: not a v1 table document")
    for key in ("window", "cells"):
        if key not in doc:
            raise SchemaError(f"{path}: missing key {key!r}")
    try:
        dmin, dmax = doc["window"]
        cells = {(int(c["d"]), int(c["q"])): int(c["dim"]) for c in doc["cells"]}
    except (TypeError, KeyError, ValueError) as exc:
        raise SchemaError(f"{path}: malformed window or cells") from exc
    return doc, BigradedTable(int(dmin), int(dmax), cells)


def cmd_table(args, out):
    p = parse(args.poly, allow_nonstandard=args.allow_nonstandard)
    ctx = SymmetryContext(p)
    table = compute_table(p, (args.dmin, args.dmax), ctx=ctx, threads=args.threads)
    contributions = None
    if args.monomials:
        contributions = aggregate_contributions(
            list_contributions(p, (args.dmin, args.dmax), ctx=ctx)
        )
    doc = _document(p, ctx, table, contributions)
    if args.format == "json":
        _emit_json(doc, out)
    elif args.format == "csv":
        _emit_csv(table, out)
    else:
        _emit_pretty(doc, table, out)
    return EXIT_OK


def cmd_compare(args, out):
    _, t1 = _load_document(args.a)
    _, t2 = _load_document(args.b)
    verdict = scale_compare(t1, t2)
    out.write(f"window compared: [{verdict.window[0]}, {verdict.window[1]}]\n")
    if verdict.kind == "equivalent":
        out.write(f"equivalent up to scale c = {verdict.c}\n")
        return EXIT_OK
    if verdict.kind == "distinguished":
        out.write(
            f"distinguished at degree {verdict.witness_degree}: "
            f"weights {list(verdict.witness_weights[0])} vs {list(verdict.witness_weights[1])}\n"
        )
        return EXIT_VERDICT
    out.write("inconclusive: no negative-degree overlap to compare\n")
    return EXIT_INCONCLUSIVE


def cmd_probe(args, out):
    p = parse(args.poly, allow_nonstandard=args.allow_nonstandard)
    table = compute_table(p, (args.dmin, -1), threads=args.threads)
    verdict = small_res_probe(table)
    out.write(f"window probed: [{verdict.window[0]}, {verdict.window[1]}]\n")
    if verdict.constant:
        out.write(f"constant rank {verdict.rank} in every negative degree of the window\n")
        out.write(
            "(window-relative cohomological criterion; not a geometric certificate)\n"
        )
        return EXIT_OK
    devs = ", ".join(f"HH^{d}={r}" for d, r in verdict.witnesses)
    out.write(f"non-constant rank: {devs} (rank at -1 is {table.dim(-1)})\n")
    return EXIT_VERDICT


def cmd_golden(args, out):
    try:
        report = golden_check(args.family, l=args.l, k=args.k)
    except GoldenMismatch as exc:
        out.write(exc.report.diff_text() + "\n")
        return EXIT_VERDICT
    out.write(report.diff_text() + "\n")
    return EXIT_OK


def build_parser():
    top = argparse.ArgumentParser(
        prog="mfhh",
        description="Exact bigraded cohomology dimension tables for invertible polynomials.",
    )
    top.add_argument("--version", action="version", version=__version__)
    sub = top.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="compute a bigraded dimension table")
    t.add_argument("--poly", required=True, help="polynomial, e.g. 'x1^3*x2+x2^3*x3+x3^2+x4^2'")
    t.add_argument("--dmin", required=True, type=int)
    t.add_argument("--dmax", required=True, type=int)
    t.add_argument("--format", choices=("pretty", "json", "csv"), default="pretty")
    t.add_argument("--monomials", action="store_true", help="include the contribution listing")
    t.add_argument("--allow-nonstandard", action="store_true",
                   help="accept non Fermat/chain/loop inputs (warning only)")
    t.add_argument("--threads", type=int, default=None,
                   help="worker cap (default: HH_THREADS or 1)")
    t.set_defaults(func=cmd_table)

    c = sub.add_parser("compare", help="scale-equivalence comparison of two table documents")
    c.add_argument("a")
    c.add_argument("b")
    c.set_defaults(func=cmd_compare)

    pr = sub.add_parser("probe-small-res", help="constant-rank probe on negative degrees")
    pr.add_argument("--poly", required=True)
    pr.add_argument("--dmin", required=True, type=int)
    pr.add_argument("--allow-nonstandard", action="store_true")
    pr.add_argument("--threads", type=int, default=None)
    pr.set_defaults(func=cmd_probe)

    g = sub.add_parser("golden", help="check a built-in family against its closed forms")
    g.add_argument("--family", required=True, help=f"one of: {', '.join(FAMILY_NAMES)}")
    g.add_argument("--l", type=int, default=None)
    g.add_argument("--k", type=int, default=1)
    g.set_defaults(func=cmd_golden)

    return top


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except WindowMismatch as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INCONCLUSIVE
    except (InputError, UnknownFamily) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except EngineError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_ENGINE
    except ValueError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except MfhhError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_ENGINE


if __name__ == "__main__":
    sys.exit(main())
