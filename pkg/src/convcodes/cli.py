"""Command-line front end.  Every command prints one JSON report to stdout.

Exit codes: 0 success, 1 mismatch (or no direct summand), 2 input error or
exhausted time budget.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bounds as B
from . import catalog
from .code import parse_columns, profile, puncture
from .gf import FieldError, field_of_order, parse_modulus, prime_power
from .metrics import (
    Budget,
    BudgetExceeded,
    CatastrophicError,
    Trellis,
    distance_report,
    is_even,
    parity_evidence,
)
from .polymat import ParseError, PolyMatrix, format_matrix, parse_matrix
from .skew import (
    Algebra,
    Automorphism,
    NotDirectSummand,
    enumerate_automorphisms,
    ideal_generator_matrix,
    is_sigma_cyclic,
    parse_skew,
)

OK, MISMATCH, INPUT_ERROR = 0, 1, 2


class InputError(Exception):
    pass


def _emit_budget(command: str, inputs: dict, partial: dict, exc: BudgetExceeded) -> int:
    # partial results stay visible but are flagged so nobody mistakes them for final numbers
    _emit(command, inputs, dict(partial, budget_exceeded=True), "input_error", str(exc))
    return INPUT_ERROR


def _emit(command: str, inputs: dict, results, status: str, summary: str | None = None) -> None:
    report = {"command": command, "inputs": inputs, "results": results, "status": status}
    sys.stdout.write(json.dumps(report, sort_keys=True, indent=2) + "\n")
    if summary:
        sys.stderr.write(summary + "\n")


def _field(q: int, modulus: str | None):
    pm = prime_power(q)
    if pm is None:
        raise InputError(f"{q} is not a prime power")
    try:
        return field_of_order(q, parse_modulus(modulus, pm[0]) if modulus else None)
    except (FieldError, ParseError) as exc:
        raise InputError(str(exc)) from None


def _read_matrix(path: str) -> PolyMatrix:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_matrix(text)
    except (ParseError, FieldError) as exc:
        raise InputError(f"{path}: {exc}") from None


# --- analysis shared by analyze and cyclic build ---


def analyze_matrix(G: PolyMatrix, coldist: int | None = None, spectrum: int | None = None, budget: Budget | None = None) -> dict:
    """Profile, bounds, distances, evenness and MDS flags of a matrix.

    On budget exhaustion a BudgetExceeded carries the results so far.
    """
    prof = profile(G)
    res: dict = {"profile": prof.as_dict(), "notes": list(prof.notes)}
    n, k, delta, m, q = prof.n, prof.k, prof.delta, prof.m, prof.q
    if delta >= 0 and k < n and prof.minimal:
        res["bounds"] = B.bounds_report(n, k, delta, m, q).as_dict()
    if not (prof.basic and prof.minimal):
        res["notes"].append("distances need a basic minimal generator matrix")
        return res
    try:
        T = Trellis(G)
    except (ValueError, CatastrophicError) as exc:
        res["notes"].append(str(exc))
        return res
    try:
        dist = distance_report(G, L=coldist, budget=budget, trellis=T)
    except BudgetExceeded as exc:
        res["distances"] = {"partial": exc.partial}
        raise BudgetExceeded(str(exc), res) from None
    res["distances"] = dist.as_dict()
    if coldist is not None:
        res["distances"]["column_distances"] = list(dist.coldist[: coldist + 1])
    if k < n:
        try:
            flags = B.mds_flags(prof, dist.d_free, dist.coldist)
        except B.BoundsError:
            flags = B.mds_flags(prof, dist.d_free, T.column_distances(B.strong_mds_index(n, k, delta), budget))
        res["mds"] = {
            "singleton_gen": B.singleton_generalized(n, k, delta),
            "is_mds": flags.is_mds,
            "M": flags.M,
            "is_strongly_mds": flags.is_strongly_mds,
            "is_compact": flags.is_compact,
        }
    if q == 2:
        ev = parity_evidence(G)
        res["evenness"] = {
            "even": is_even(G),
            "enumeration": {"max_degree": ev.max_deg, "messages": ev.messages, "all_even": ev.all_even,
                            "all_doubly_even": ev.all_doubly_even},
        }
    if spectrum is not None:
        try:
            spec = T.weight_spectrum(spectrum, budget)
        except BudgetExceeded as exc:
            raise BudgetExceeded(str(exc), res) from None
        res["spectrum"] = {str(w): c for w, c in sorted(spec.items())}
    return res


# --- commands ---


def cmd_bounds(args) -> int:
    inputs = {"n": args.n, "k": args.k, "delta": args.delta, "m": args.m, "q": args.q}
    try:
        rep = B.bounds_report(args.n, args.k, args.delta, args.m, args.q)
    except B.BoundsError as exc:
        raise InputError(str(exc)) from None
    res = rep.as_dict()
    _emit("bounds", inputs, res, "ok",
          f"({args.n},{args.k},{args.delta};{args.m})_{args.q}: singleton {res['singleton_gen']}, "
          f"heller {res['heller']}, griesmer {res['griesmer']}")
    return OK


def cmd_analyze(args) -> int:
    G = _read_matrix(args.file)
    inputs = {"file": args.file}
    if args.columns:
        inputs["columns"] = args.columns
        try:
            G = puncture(G, parse_columns(args.columns))
        except ValueError as exc:
            raise InputError(str(exc)) from None
    try:
        res = analyze_matrix(G, args.coldist, args.spectrum, Budget(args.budget_seconds))
    except BudgetExceeded as exc:
        return _emit_budget("analyze", inputs, exc.partial, exc)
    status, code = "ok", OK
    d = res.get("distances", {}).get("d_free")
    if args.expect_dfree is not None:
        inputs["expect_dfree"] = args.expect_dfree
        if d != args.expect_dfree:
            status, code = "mismatch", MISMATCH
    _emit("analyze", inputs, res, status, f"{res['profile']['label']}: d_free {d}")
    return code


def _algebra(args):
    F = _field(args.q, args.modulus)
    try:
        return Algebra(args.n, F)
    except FieldError as exc:
        raise InputError(str(exc)) from None


def _sigma(A: Algebra, text: str) -> Automorphism:
    try:
        return Automorphism(A.parse(text))
    except (ValueError, FieldError) as exc:
        raise InputError(f"invalid sigma: {exc}") from None


def cmd_cyclic(args) -> int:
    if args.action == "autos":
        A = _algebra(args)
        try:
            autos = enumerate_automorphisms(A.n, A.field)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        imgs = [str(s) for s in autos]
        _emit("cyclic autos", {"n": args.n, "q": args.q}, {"count": len(imgs), "automorphisms": imgs}, "ok",
              f"{len(imgs)} automorphisms")
        return OK
    if args.action == "build":
        A = _algebra(args)
        sigma = _sigma(A, args.sigma)
        inputs = {"n": args.n, "q": args.q, "sigma": args.sigma, "g": args.g}
        try:
            g = parse_skew(args.g, sigma)
        except (ParseError, FieldError) as exc:
            raise InputError(f"invalid generator polynomial: {exc}") from None
        try:
            G = ideal_generator_matrix(g)
        except NotDirectSummand as exc:
            _emit("cyclic build", inputs, {"error": f"not a direct summand: {exc}"}, "mismatch")
            return MISMATCH
        except ValueError as exc:
            raise InputError(str(exc)) from None
        try:
            res = analyze_matrix(G, budget=Budget(args.budget_seconds))
        except BudgetExceeded as exc:
            exc.partial["matrix"] = format_matrix(G, header=False).splitlines()
            return _emit_budget("cyclic build", inputs, exc.partial, exc)
        res["matrix"] = format_matrix(G, header=False).splitlines()
        _emit("cyclic build", inputs, res, "ok",
              f"{res['profile']['label']}: d_free {res.get('distances', {}).get('d_free')}")
        return OK
    # check
    G = _read_matrix(args.file)
    try:
        A = Algebra(G.n, G.field)
    except FieldError as exc:
        raise InputError(str(exc)) from None
    sigma = _sigma(A, args.sigma)
    prof = profile(G)
    if not prof.basic:
        raise InputError("generator matrix has no polynomial right inverse")
    ok = is_sigma_cyclic(G, sigma)
    _emit("cyclic check", {"file": args.file, "sigma": args.sigma}, {"sigma_cyclic": ok, "profile": prof.as_dict()},
          "ok", f"sigma-cyclic: {ok}")
    return OK


def cmd_catalog(args) -> int:
    if args.action == "list":
        rows = []
        for e in catalog.entries(args.table):
            rows.append({
                "id": e.id,
                "table": e.table,
                "griesmer": e.expected_g,
                "coldist_index": e.coldist_index,
                "mds": e.mds_star,
                "field_size_optimal": e.mds_bullet,
                "strongly_mds": e.strongly_mds,
                "evenness": e.evenness,
                "cyclic": e.cyclic,
                "sigma": e.sigma,
                "punctured_from": e.base,
                "columns": list(e.columns) if e.base else None,
            })
        _emit("catalog list", {"table": args.table}, {"count": len(rows), "entries": rows}, "ok",
              f"{len(rows)} entries")
        return OK
    if args.action == "export":
        e = _entry(args.id)
        text = e.export()
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return OK
    # verify
    if args.all or args.id is None:
        selected = catalog.entries(args.table)
    else:
        selected = [_entry(args.id)]
    budget = Budget(args.budget_seconds)
    reports = []
    try:
        for e in selected:
            reports.append(catalog.verify(e, budget))
    except BudgetExceeded as exc:
        res = {"reports": [r.as_dict() for r in reports], "interrupted_at": e.id}
        return _emit_budget("catalog verify", {"ids": [e.id for e in selected]}, res, exc)
    passed = sum(r.passed for r in reports)
    res = {"count": len(reports), "passed": passed, "reports": [r.as_dict() for r in reports]}
    failed = [r.id for r in reports if not r.passed]
    res["failed"] = failed
    status = "ok" if not failed else "mismatch"
    _emit("catalog verify", {"ids": [e.id for e in selected]}, res, status,
          f"{passed}/{len(reports)} entries pass" + (f"; failing: {', '.join(failed)}" if failed else ""))
    return OK if not failed else MISMATCH


def _entry(id_):
    try:
        return catalog.get(id_)
    except catalog.UnknownEntry:
        raise InputError(f"unknown catalog id {id_!r}") from None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="convcodes", description="Convolutional code bounds, distances and cyclic structure.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", help="upper bounds on the free distance")
    for name in ("n", "k", "delta", "m", "q"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("analyze", help="analyze a generator matrix file")
    p.add_argument("file")
    p.add_argument("--columns", help="keep only these 1-based columns, e.g. 1,2,4-12")
    p.add_argument("--coldist", type=int, metavar="L", help="report column distances d_0..d_L")
    p.add_argument("--spectrum", type=int, metavar="W", help="count atomic paths of weight <= W")
    p.add_argument("--expect-dfree", type=int)
    p.add_argument("--budget-seconds", type=float)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("cyclic", help="sigma-cyclic codes")
    csub = p.add_subparsers(dest="action", required=True)
    c = csub.add_parser("autos", help="list automorphisms of F[x]/(x^n-1)")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--q", type=int, required=True)
    c.add_argument("--modulus")
    c = csub.add_parser("build", help="code generated by a skew polynomial")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--q", type=int, required=True)
    c.add_argument("--modulus")
    c.add_argument("--sigma", required=True, help="image of x, e.g. x^5")
    c.add_argument("--g", required=True, help="e.g. '1+x^2 + z*(x+x^5)'")
    c.add_argument("--budget-seconds", type=float)
    c = csub.add_parser("check", help="test whether a matrix generates a sigma-cyclic code")
    c.add_argument("file")
    c.add_argument("--sigma", required=True)
    p.set_defaults(func=cmd_cyclic)

    p = sub.add_parser("catalog", help="reference codes")
    csub = p.add_subparsers(dest="action", required=True)
    c = csub.add_parser("list")
    c.add_argument("--table", choices=["I", "II", "III"])
    c = csub.add_parser("verify")
    c.add_argument("id", nargs="?")
    c.add_argument("--all", action="store_true")
    c.add_argument("--table", choices=["I", "II", "III"])
    c.add_argument("--budget-seconds", type=float)
    c = csub.add_parser("export")
    c.add_argument("id")
    c.add_argument("--output", "-o")
    p.set_defaults(func=cmd_catalog)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else OK
    try:
        return args.func(args)
    except InputError as exc:
        _emit(args.command, {}, {"error": str(exc)}, "input_error", f"error: {exc}")
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
