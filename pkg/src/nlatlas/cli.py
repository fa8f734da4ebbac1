"""Command-line surface.

Exit codes: 0 on success, 2 when a table reproduction found a mismatch,
3 on parse errors, bad input or I/O trouble.  All numeric output is exact
integer arithmetic.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import atlas as atlas_mod
from .chow import (CI222, closed_form_coefficients, parse_ci,
                   self_intersection)
from .counts import codimension_bound
from .dataset import load_dataset
from .errors import NLAtlasError
from .hodge import classify_solved, diagram_from_dict, solve_diagram
from .lattice import discriminant, fourfold_lattice, mod16_class
from .report import describe, reproduce_tables, table_csv, table_markdown
from .serialize import encode
from .surfaces import parse_surface_spec

EXIT_OK = 0
EXIT_MISMATCH = 2
EXIT_BAD_INPUT = 3


def _surface_from_args(args) -> object:
    spec = args.surface
    if getattr(args, "abs", None):
        spec = "abs:" + args.abs
    if not spec:
        raise NLAtlasError("need --surface or --abs")
    return parse_surface_spec(spec)


def _emit(args, payload: dict, text: str):
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _cmd_invariants(args) -> int:
    s = _surface_from_args(args)
    text = (
        f"{s.provenance_label or args.surface}: degree {s.degree}, "
        f"sectional genus {s.sect_genus}, K^2 = {s.K2}, chi(O) = {s.chi_O}, "
        f"chi_top = {s.chi_top}, h0(O(H)) = {s.h0_H}, span PP^{s.span_dim}"
        + (f", {s.nodes} node(s)" if s.nodes else "")
    )
    _emit(args, encode(s), text)
    return EXIT_OK


def _cmd_lattice(args) -> int:
    s = _surface_from_args(args)
    ci = parse_ci(args.ci)
    lat = fourfold_lattice(ci, s)
    disc = discriminant(lat)
    mod = mod16_class(disc)
    payload = {"lattice": encode(lat), "discriminant": disc,
               "mod16": {"residue": mod.residue, "admissible": mod.admissible}}
    text = (f"matrix {lat}\ndiscriminant {disc} "
            f"(residue {mod.residue} mod 16, "
            + ("admissible" if mod.admissible else "inadmissible") + ")")
    _emit(args, payload, text)
    return EXIT_OK


def _cmd_selfint(args) -> int:
    s = _surface_from_args(args)
    ci = parse_ci(args.ci)
    value = self_intersection(ci, s)
    ch2, chk = closed_form_coefficients(ci)
    payload = {"self_intersection": value, "cH2": ch2, "cHK": chk,
               "node_rule_used": bool(s.nodes)}
    text = f"(S)^2_X = {value}   coefficients (cH2, cHK) = ({ch2}, {chk})"
    if s.nodes:
        text += f"   [includes fitted +2 per node for {s.nodes} node(s)]"
    _emit(args, payload, text)
    return EXIT_OK


def _cmd_count(args) -> int:
    dataset = load_dataset(args.dataset)
    if args.table_row:
        row = dataset.row(args.table_row)
        s = parse_surface_spec(row.surface)
        h0_nsx = row.h0_NSX
    else:
        s = _surface_from_args(args)
        if args.h0nsx is None:
            raise NLAtlasError("need --h0nsx N or --table-row ID")
        h0_nsx = args.h0nsx
    count = codimension_bound(s, h0_nsx)
    text = (f"h0(I_S(2)) = {count.h0_IS2}, h0(N_S/P7) = {count.h0_N}, "
            f"Grassmannian dim = {count.grass_dim}, h0(N_S/X) = {count.h0_NSX}\n"
            f"codimension bound = {count.codim_bound}   "
            f"[flags: {', '.join(count.flags)}]")
    _emit(args, encode(count), text)
    return EXIT_OK


def _cmd_ledger(args) -> int:
    with open(args.diagram) as fh:
        data = json.load(fh)
    solved = solve_diagram(diagram_from_dict(data))
    cls = classify_solved(solved)
    inv = solved.invariants
    payload = {
        "unknown_diamond": encode(solved.unknown),
        "invariants": {"pg": inv.pg, "q": inv.q, "b2": inv.b2,
                       "chi_O": inv.chi_O, "chi_top": inv.chi_top, "K2": inv.K2},
        "classification": {
            "castelnuovo_type_I": cls.castelnuovo_type_I,
            "non_minimal": cls.non_minimal,
            "blow_downs": cls.blow_downs,
            "minimal_model_K2": cls.minimal_model_K2,
        },
    }
    text = (solved.unknown.pretty() + "\n"
            f"p_g = {inv.pg}, q = {inv.q}, b2 = {inv.b2}, chi(O) = {inv.chi_O}, "
            f"chi_top = {inv.chi_top}, K^2 = {inv.K2}\n")
    if cls.castelnuovo_type_I:
        text += "minimal Castelnuovo surface of type I (K^2 = 3 p_g - 7)\n"
    if cls.non_minimal:
        text += (f"non-minimal: {cls.blow_downs} blow-down(s) reach the minimal "
                 f"model with K^2 = {cls.minimal_model_K2}\n")
    _emit(args, payload, text.rstrip())
    return EXIT_OK


def _cmd_search(args) -> int:
    bounds = atlas_mod.SearchBounds(
        max_a=args.max_a, max_points=args.max_points, max_mult=args.max_mult,
        min_h0_IS2=args.min_h0_is2, max_codim=args.max_codim,
    )
    entries = atlas_mod.enumerate_atlas(bounds, workers=args.workers)
    if args.gaps:
        rep = atlas_mod.gap_report(entries, up_to=args.up_to, bounds=bounds)
        _emit(args, encode(rep), rep.describe())
        return EXIT_OK
    if args.det is not None:
        entries = [e for e in entries if e.discriminant == args.det]
    if args.format == "json":
        print(json.dumps([encode(e) for e in entries], indent=2))
    elif args.format == "csv":
        print("surface,m11,m12,m22,discriminant,codim_lo,codim_hi,h0_IS2,h0_N")
        for e in entries:
            lat = e.lattice
            print(f"{e.model.spec_string()},{lat.m11},{lat.m12},{lat.m22},"
                  f"{e.discriminant},{e.codim_bound_range[0]},"
                  f"{e.codim_bound_range[1]},{e.h0_IS2},{e.h0_N}")
    elif args.format == "md":
        print(f"bounds: {bounds.describe()}\n")
        print("| surface | matrix (det) | codim range | h0(I(2)), h0(N_P7) |")
        print("|---|---|---|---|")
        for e in entries:
            print(f"| S({e.model.spec_string()}) | {e.lattice} "
                  f"({e.discriminant}) | {list(e.codim_bound_range)} | "
                  f"{e.h0_IS2}, {e.h0_N} |")
    else:
        print(f"bounds: {bounds.describe()}")
        print(f"{len(entries)} entr" + ("y" if len(entries) == 1 else "ies"))
        for e in entries:
            print(f"  {e.model}: matrix {e.lattice}, det {e.discriminant}, "
                  f"codim in {list(e.codim_bound_range)}, "
                  f"h0(I(2)) = {e.h0_IS2}, h0(N) = {e.h0_N}")
    return EXIT_OK


def _cmd_tables(args) -> int:
    dataset = load_dataset(args.dataset)
    which = [int(w) for w in args.which.split(",")] if args.which else [1, 2, 3, 4]
    all_ok = True
    for w in which:
        rep = reproduce_tables(w, dataset)
        if args.format == "json":
            print(json.dumps({
                "table": w, "ok": rep.ok,
                "mismatches": [{"row": c.row_id, "diffs": {
                    k: {"got": list(v[0]) if isinstance(v[0], tuple) else v[0],
                        "want": list(v[1]) if isinstance(v[1], tuple) else v[1]}
                    for k, v in c.diffs.items()}} for c in rep.mismatches],
            }, indent=2))
        elif args.format == "md":
            print(f"### Table {w}\n")
            print(table_markdown(rep, dataset))
            print()
        elif args.format == "csv":
            print(table_csv(rep, dataset))
        else:
            status = "all rows match" if rep.ok else \
                f"{len(rep.mismatches)} mismatching row(s)"
            print(f"table {w}: {len(rep.checks)} rows, {status}")
            for c in rep.mismatches:
                print(f"  {c.row_id} ({c.surface}): {c.diffs}")
        all_ok = all_ok and rep.ok
    return EXIT_OK if all_ok else EXIT_MISMATCH


def _cmd_describe(args) -> int:
    dataset = None
    try:
        dataset = load_dataset(args.dataset)
    except NLAtlasError:
        pass
    ci = parse_ci(args.ci) if args.ci else CI222
    print(describe(args.surface, ci, dataset))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nlatlas",
        description="Exact calculator for surface lattices, self-intersections "
                    "and Noether-Lefschetz discriminants of complete "
                    "intersections of three quadrics in P7.",
    )
    parser.add_argument("--format", choices=("text", "json", "csv", "md"),
                        default="text")
    parser.add_argument("--dataset", default=None,
                        help="path to a table dataset (default: bundled; "
                             "NLATLAS_DATASET overrides)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="invariant record of a surface spec")
    p.add_argument("--surface", required=True)
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("lattice", help="rank-2 lattice and discriminant")
    p.add_argument("--ci", default="2,2,2")
    p.add_argument("--surface")
    p.add_argument("--abs", help="abstract invariants 'deg=..,g=..,K2=..,chiO=..'")
    p.set_defaults(func=_cmd_lattice)

    p = sub.add_parser("selfint", help="self-intersection of the surface class")
    p.add_argument("--ci", default="2,2,2")
    p.add_argument("--surface")
    p.add_argument("--abs", help="abstract invariants 'deg=..,g=..,K2=..,chiO=..'")
    p.set_defaults(func=_cmd_selfint)

    p = sub.add_parser("count", help="parameter count / codimension bound")
    p.add_argument("--surface")
    p.add_argument("--abs")
    p.add_argument("--h0nsx", type=int, default=None)
    p.add_argument("--table-row", default=None,
                   help="pull surface and h0(N_S/X) from a dataset row")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("ledger", help="solve a two-sided blow-up diagram")
    p.add_argument("--diagram", required=True, help="JSON diagram file")
    p.set_defaults(func=_cmd_ledger)

    p = sub.add_parser("search", help="enumerate the discriminant atlas")
    p.add_argument("--max-a", type=int, default=8)
    p.add_argument("--max-points", type=int, default=13)
    p.add_argument("--max-mult", type=int, default=3)
    p.add_argument("--min-h0-is2", type=int, default=7)
    p.add_argument("--max-codim", type=int, default=7)
    p.add_argument("--det", type=int, default=None, help="filter to one bucket")
    p.add_argument("--gaps", action="store_true", help="emit the gap report")
    p.add_argument("--up-to", type=int, default=110)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("tables", help="recompute the bundled tables and diff")
    p.add_argument("--which", default=None, help="comma list from 1,2,3,4")
    p.set_defaults(func=_cmd_tables)

    p = sub.add_parser("describe", help="one-screen report for a surface spec")
    p.add_argument("--surface", required=True)
    p.add_argument("--ci", default=None)
    p.set_defaults(func=_cmd_describe)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NLAtlasError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
