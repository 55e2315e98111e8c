"""Command-line front end.

Subcommands: field-info, mindist, equiv, census, verify.
Exit codes: 0 success, 1 verification failure, 2 usage/parse error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import classify, formulas
from .codes import build_code, brute_min_distance_generic
from .errors import (
    NoFormulaForFamily,
    ParseError,
    Toric3Error,
)
from .galois import make_field
from .polytopes import (
    EMBEDDED_POLYGON,
    EMPTY_TETRA,
    SIG21,
    SIG22,
    SIG31,
    SIG32,
    LatticePolytope,
    parse_polytope_spec,
)


def _formula_for(poly: LatticePolytope, q: int):
    fam = poly.family
    if fam == EMPTY_TETRA:
        return formulas.dim4_distance(q, poly.params[1])
    if fam == SIG21:
        return formulas.dim5_distance((2, 1), q, *poly.params)
    if fam == SIG22:
        return formulas.dim5_distance((2, 2), q)
    if fam == SIG31:
        return formulas.dim5_distance((3, 1), q)
    if fam == SIG32:
        return formulas.dim5_distance((3, 2), q, *poly.params)
    if fam == EMBEDDED_POLYGON:
        return formulas.degenerate_distance(poly.params[0], q)
    raise NoFormulaForFamily(f"no closed-form distance for family {fam}")


def cmd_field_info(args) -> int:
    f = make_field(args.q)
    info = {
        "q": f.q,
        "p": f.p,
        "m": f.m,
        "modulus": list(f.modulus) if f.modulus else None,
        "alpha": f.alpha,
        "alpha_order": f.alpha_order,
        "units": f.units(),
    }
    print(json.dumps(info, indent=2))
    return 0


def cmd_mindist(args) -> int:
    poly = parse_polytope_spec(args.poly)
    field = make_field(args.q)
    out = {"q": args.q, "poly": poly.describe(), "method": args.method}
    ok = True
    if args.method in ("formula", "both"):
        out["formula"] = _formula_for(poly, args.q).to_dict()
    if args.method in ("brute", "both"):
        code = build_code(field, poly)
        out["brute"] = code.min_distance_brute().to_dict()
    if args.method == "both":
        fr, br = out["formula"], out["brute"]
        ok = fr["lower"] <= br["lower"] <= fr["upper"]
        if fr["exact"]:
            ok = ok and br["lower"] == fr["lower"]
        out["consistent"] = ok
    print(json.dumps(out, indent=2))
    return 0 if ok else 1


def _theorem_verdict(q, pa: LatticePolytope, pb: LatticePolytope):
    dim4 = {EMPTY_TETRA}
    dim5 = {SIG21, SIG22, SIG31, SIG32}
    sig_of = {SIG21: (2, 1), SIG22: (2, 2), SIG31: (3, 1), SIG32: (3, 2)}
    if pa.family in dim4 and pb.family in dim4:
        return classify.dim4_theorem_verdict(q, *pa.params, *pb.params)
    if pa.family in dim5 and pb.family in dim5:
        return classify.dim5_theorem_verdict(
            q,
            sig_of[pa.family],
            pa.params or (0, 0),
            sig_of[pb.family],
            pb.params or (0, 0),
        )
    return classify.EquivalenceVerdict(classify.INCONCLUSIVE, "NONE")


def cmd_equiv(args) -> int:
    field = make_field(args.q)
    pa = parse_polytope_spec(args.a)
    pb = parse_polytope_spec(args.b)
    out = {"q": args.q, "a": pa.describe(), "b": pb.describe(), "method": args.method}
    if args.method in ("theorem", "both"):
        out["theorem"] = _theorem_verdict(args.q, pa, pb).to_dict()
    if args.method in ("witness", "both"):
        wit = classify.witness_equivalence(build_code(field, pa), build_code(field, pb))
        wd = wit.to_dict()
        if args.verbose and wit.evidence_kind == "WITNESS":
            wd["permutation"] = [int(x) for x in wit.detail]
        out["witness"] = wd
    if args.method == "both":
        ts, ws = out["theorem"]["status"], out["witness"]["status"]
        out["agreement"] = (
            ts == ws
            or classify.INCONCLUSIVE in (ts, ws)
        )
    print(json.dumps(out, indent=2))
    return 0


def cmd_census(args) -> int:
    field = make_field(args.q)
    entries = classify.census(field, args.dim, max_workers=args.threads)
    rows = [e.row(args.q) for e in entries]
    if args.out:
        if args.format == "json":
            with open(args.out, "w") as fh:
                json.dump(rows, fh, indent=2)
                fh.write("\n")
        else:
            with open(args.out, "w", newline="") as fh:
                writer = csv.DictWriter(fh, fieldnames=list(rows[0]))
                writer.writeheader()
                writer.writerows(rows)
        print(f"wrote {len(rows)} rows to {args.out}")
    else:
        print(json.dumps(rows, indent=2))
    return 0


def _verify_one(q: int) -> list[tuple[str, bool]]:
    """Desk-scale verification battery for one field order."""
    from .polytopes import embedded_polygon

    field = make_field(q)
    checks = []

    # dim-4 formula vs brute force on the full sweep
    ok = True
    for s, t in classify.dim4_parameter_sweep(q):
        code = build_code(field, classify._build_entry(field, EMPTY_TETRA, s, t).polytope)
        if code.min_distance_brute().value != formulas.dim4_distance(q, t).value:
            ok = False
    checks.append(("dim4 formula == brute", ok))

    # census concordance (raises on mismatch)
    try:
        classify.census(field, 4)
        checks.append(("dim4 census concordance", True))
    except Toric3Error:
        checks.append(("dim4 census concordance", False))

    if q >= 5:
        ok = True
        for fam, s, t in classify.dim5_parameter_sweep(q):
            entry = classify._build_entry(field, fam, s, t)
            f = entry.formula
            if not (f.lower <= entry.d_brute <= f.upper):
                ok = False
        checks.append(("dim5 width-1 formulas/bounds", ok))

        try:
            classify.census(field, 5)
            checks.append(("dim5 census concordance", True))
        except Toric3Error:
            checks.append(("dim5 census concordance", False))

        # degenerate distances and the product theorem
        ok = True
        for i in range(1, 5):
            poly = embedded_polygon(i)
            d3 = build_code(field, poly).min_distance_brute().value
            f = formulas.degenerate_distance(i, q)
            if f.exact and d3 != f.value:
                ok = False
            if not f.exact and d3 < f.lower:
                ok = False
            d2 = brute_min_distance_generic(
                field, [p[:2] for p in poly.points], 2
            )
            if d3 != (q - 1) * d2:
                ok = False
        checks.append(("degenerate + product theorem", ok))

    return checks


def cmd_verify(args) -> int:
    qs = [int(x) for x in args.q.split(",")]
    all_ok = True
    for q in qs:
        checks = _verify_one(q)
        for name, ok in checks:
            print(f"q={q:<3} {'PASS' if ok else 'FAIL'}  {name}")
            all_ok = all_ok and ok
    return 0 if all_ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="toric3",
        description="Toric 3-fold codes of dimensions 4 and 5: distances, "
        "equivalence, census.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field-info", help="describe GF(q) and its tables")
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_field_info)

    p = sub.add_parser("mindist", help="minimum distance of a code")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--poly", required=True, help="e.g. T(1,2), P21(0,1), P22, W2:1, E:3")
    p.add_argument("--method", choices=["brute", "formula", "both"], default="both")
    p.set_defaults(func=cmd_mindist)

    p = sub.add_parser("equiv", help="decide monomial equivalence")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--method", choices=["theorem", "witness", "both"], default="both")
    p.add_argument("--verbose", action="store_true", help="dump the witness permutation")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("census", help="equivalence-class census")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--dim", type=int, choices=[4, 5], required=True)
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", help="run the verification battery")
    p.add_argument("--q", required=True, help="comma-separated field orders")
    p.set_defaults(func=cmd_verify)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except Toric3Error as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
