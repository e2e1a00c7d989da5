"""Command-line front end: construct families, analyze spectra and transfer,
run fidelity sweeps, reproduce the classification searches, and run the full
verification battery.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import os
import sys

from .constructions import FamilyBundle, build_family, build_family_spec
from .linalg import ComplexMatrix, hermitian_from_entries, spectral_decomposition
from .star import CSV_HEADER, classify_star_m
from .transfer import (NotProportional, SupportMismatch, align_exact_spectrum,
                       eigenvalue_support, fidelity_sweep, pgst_verdict,
                       pst_verdict, strong_cospectrality)
from .upst_search import classify_all, exhaustive_rule_out


def thread_cap() -> int:
    """Parallelism cap from QWALK_THREADS; the implementation is currently
    sequential, so the cap is validated and recorded but never exceeded."""
    raw = os.environ.get("QWALK_THREADS")
    if raw is None:
        return 1
    try:
        cap = int(raw)
    except ValueError:
        raise SystemExit(2)
    if cap < 1:
        raise SystemExit(2)
    return 1


def _load_bundle(args) -> FamilyBundle:
    if getattr(args, "matrix", None):
        mat = hermitian_from_entries(ComplexMatrix.load(args.matrix).array)
        return FamilyBundle("matrix", mat)
    if getattr(args, "family", None):
        params = {}
        for key in ("n", "m", "param"):
            val = getattr(args, key.replace("-", "_"), None)
            if val is not None:
                params[key] = val
        return build_family(args.family, **params)
    raise SystemExit("need --family or --matrix")


def _out_stream(args):
    """Context manager for --out; stdout is borrowed, never closed."""
    if getattr(args, "out", None):
        return open(args.out, "w")
    return contextlib.nullcontext(sys.stdout)


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def cmd_construct(args) -> int:
    if args.spec:
        with open(args.spec) as fh:
            bundle = build_family_spec(json.load(fh))
    else:
        bundle = _load_bundle(args)
    payload = bundle.matrix.to_json()
    with _out_stream(args) as fh:
        json.dump(payload, fh)
        fh.write("\n")
    return 0


def cmd_analyze(args) -> int:
    bundle = _load_bundle(args)
    dec = spectral_decomposition(bundle.matrix, cluster_tol=args.tol)
    n = bundle.matrix.dim
    report = {
        "dim": n,
        "eigenvalues": [float(t) for t in dec.eigenvalues],
        "multiplicities": dec.multiplicities,
        "supports": {str(v): list(eigenvalue_support(dec, v).indices)
                     for v in range(n)},
        "strongly_cospectral_pairs": [],
    }
    for a in range(n):
        for b in range(a + 1, n):
            try:
                q = strong_cospectrality(dec, a, b)
            except (SupportMismatch, NotProportional):
                continue
            report["strongly_cospectral_pairs"].append({
                "a": a, "b": b,
                "quarrels": [float(p) for p in q.phases],
                "rational_turns": [None if u is None else str(u)
                                   for u in q.rationals],
            })
    with _out_stream(args) as fh:
        json.dump(report, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return 0


def cmd_pst_check(args) -> int:
    bundle = _load_bundle(args)
    dec = spectral_decomposition(bundle.matrix, cluster_tol=args.tol)
    exact = None
    if bundle.exact_spectrum is not None:
        exact = align_exact_spectrum(dec, bundle.exact_spectrum)
    kwargs = {}
    if args.t_max is not None:
        kwargs["t_max"] = args.t_max
    if args.steps is not None:
        kwargs["steps"] = args.steps
    verdict = pst_verdict(dec, args.frm, args.to, exact, **kwargs)
    if bundle.notes:
        verdict.notes = (verdict.notes + "; " + bundle.notes).strip("; ")
    with _out_stream(args) as fh:
        json.dump(verdict.to_json(), fh, indent=2, sort_keys=True)
        fh.write("\n")
    return 0


def cmd_pgst_check(args) -> int:
    bundle = _load_bundle(args)
    dec = spectral_decomposition(bundle.matrix, cluster_tol=args.tol)
    exact = None
    if bundle.exact_spectrum is not None:
        exact = align_exact_spectrum(dec, bundle.exact_spectrum)
    lattice = None
    product = bundle.extra.get("product")
    if product is not None and hasattr(product, "relation_superlattice"):
        lattice = product.relation_superlattice()
    verdict = pgst_verdict(dec, args.frm, args.to, exact, lattice)
    if bundle.notes:
        verdict.notes = (verdict.notes + "; " + bundle.notes).strip("; ")
    with _out_stream(args) as fh:
        json.dump(verdict.to_json(), fh, indent=2, sort_keys=True)
        fh.write("\n")
    return 0


def cmd_sweep(args) -> int:
    bundle = _load_bundle(args)
    dec = spectral_decomposition(bundle.matrix, cluster_tol=args.tol)
    result = fidelity_sweep(dec, args.frm, args.to, args.t_max, args.steps)
    with _out_stream(args) as fh:
        result.to_csv(fh)
    sys.stderr.write(f"max fidelity {_fmt(result.best_fidelity)} "
                     f"at t = {_fmt(result.best_time)}\n")
    return 0


def cmd_search_upst(args) -> int:
    if args.n in (3, 4, 5):
        reports = exhaustive_rule_out(args.n)
    else:
        reports = classify_all(args.n)
    with _out_stream(args) as fh:
        for report in reports:
            fh.write(report.to_json_line() + "\n")
    survivors = sum(1 for r in reports if r.verdict == "survives")
    sys.stderr.write(f"{len(reports)} report(s), {survivors} survivor(s)\n")
    return 0


def _parse_m_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def cmd_classify_star(args) -> int:
    with _out_stream(args) as fh:
        fh.write(CSV_HEADER + "\n")
        for m in _parse_m_range(args.m):
            fh.write(classify_star_m(m).csv_row() + "\n")
    return 0


def cmd_verify_paper(args) -> int:
    from .verify import run_battery
    return run_battery(sys.stdout)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qwalk",
        description="Quantum-walk state transfer on Hermitian and oriented "
                    "graphs: construction, certification, and search.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, vertices=False, sweep=False):
        p.add_argument("--family", help="named family to construct")
        p.add_argument("--matrix", help="path to a matrix JSON file")
        p.add_argument("--n", type=int, help="family size parameter")
        p.add_argument("--m", type=int, help="family attachment parameter")
        p.add_argument("--param", type=float,
                       help="family real parameter (lambda/theta/gamma)")
        p.add_argument("--tol", type=float, default=1e-8,
                       help="eigenvalue clustering tolerance")
        p.add_argument("--out", help="output path (default stdout)")
        if vertices:
            p.add_argument("--from", dest="frm", type=int, required=True,
                           help="source vertex (0-based)")
            p.add_argument("--to", dest="to", type=int, required=True,
                           help="target vertex (0-based)")
        if sweep:
            p.add_argument("--t-max", dest="t_max", type=float,
                           help="sweep window upper end")
            p.add_argument("--steps", type=int, help="sweep grid size")

    p = sub.add_parser("construct", help="build a family and write its matrix JSON")
    p.add_argument("--spec", help="path to a construction spec JSON")
    add_common(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("analyze", help="spectrum, supports, cospectral pairs, quarrels")
    add_common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("pst-check", help="certify perfect state transfer")
    add_common(p, vertices=True, sweep=True)
    p.set_defaults(func=cmd_pst_check)

    p = sub.add_parser("pgst-check", help="certify pretty good state transfer")
    add_common(p, vertices=True)
    p.set_defaults(func=cmd_pgst_check)

    p = sub.add_parser("sweep", help="fidelity sweep CSV")
    add_common(p, vertices=True, sweep=True)
    p.set_defaults(func=cmd_sweep)
    p.set_defaults(t_max=100.0, steps=20001)

    p = sub.add_parser("search-upst", help="universal-PST classification reports")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_search_upst)

    p = sub.add_parser("classify-star", help="star-product transfer table")
    p.add_argument("--m", required=True, help="single value or range lo..hi")
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_classify_star)

    p = sub.add_parser("verify-paper", help="run the acceptance battery")
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    thread_cap()
    try:
        return args.func(args)
    except (ValueError, OSError, RuntimeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
