"""Command-line front end.

Subcommands: compute, verify, sweep, ratio, export.  All results go to
stdout; files are written only through --out.  Exit codes: 0 ok,
1 verification or agreement failure, 2 parse error, 3 domain error,
4 budget exhausted.

For cycle/path instances the formula-backed invariants (alpha_mix,
gamma_tm, chi_tt_d) are answered from the closed forms with a verified
certificate; --exact forces the solver instead.  Arbitrary graphs always
go through the solvers.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import closed_forms as cf
from . import solvers, verify
from .graphs import (
    DomainError,
    Graph,
    GraphParseError,
    labels_to_json,
    line_graph,
    read_edge_list,
    to_dot,
    total_graph,
    total_graph_to_dot,
    write_edge_list,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_BUDGET = 4

INVARIANTS = ("alpha", "chi", "gamma_t", "chi_t_d", "alpha_mix", "gamma_tm", "chi_total", "chi_tt_d")
FORMULA_INVARIANTS = ("alpha_mix", "gamma_tm", "chi_tt_d")
VERIFY_KINDS = ("proper", "tds", "tdc", "tdtc", "tmds", "independent", "mixed-independent")

_SOLVERS = {
    "alpha": solvers.independence_number,
    "chi": solvers.chromatic_number,
    "gamma_t": solvers.total_domination_number,
    "chi_t_d": solvers.total_dominator_chromatic_number,
    "alpha_mix": solvers.mixed_independence_number,
    "gamma_tm": solvers.total_mixed_domination_number,
    "chi_total": solvers.total_chromatic_number,
    "chi_tt_d": solvers.tdtc_number,
}

# (universe, verify kind) of each invariant's certificate
_CERT_STYLE = {
    "alpha": (verify.VERTEX_UNIVERSE, "independent"),
    "chi": (verify.VERTEX_UNIVERSE, "proper"),
    "gamma_t": (verify.VERTEX_UNIVERSE, "tds"),
    "chi_t_d": (verify.VERTEX_UNIVERSE, "tdc"),
    "alpha_mix": (verify.MIXED_UNIVERSE, "mixed-independent"),
    "gamma_tm": (verify.MIXED_UNIVERSE, "tmds"),
    "chi_total": (verify.MIXED_UNIVERSE, "proper"),
    "chi_tt_d": (verify.MIXED_UNIVERSE, "tdtc"),
}


def _add_graph_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=(cf.CYCLE, cf.PATH), help="graph family")
    p.add_argument("--n", type=int, help="order of the family instance")
    p.add_argument("--graph", metavar="FILE", help="edge-list file (first line 'n m', then 'i j' lines)")


def _add_budget(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-nodes", type=int, default=None, help="search node limit")
    p.add_argument("--max-time", type=float, default=None, help="search time limit in seconds")


def _budget(args) -> solvers.SearchBudget | None:
    if args.max_nodes is None and args.max_time is None:
        return None
    return solvers.SearchBudget(max_nodes=args.max_nodes, max_time=args.max_time)


def _graph_source(args) -> tuple[Graph, str, tuple[str, int] | None]:
    """Resolve (--family, --n) or --graph into (graph, display name, family info)."""
    family = getattr(args, "family", None)
    graph_file = getattr(args, "graph", None)
    if family is not None and graph_file is not None:
        raise GraphParseError("give either --family/--n or --graph, not both")
    if family is not None:
        if args.n is None:
            raise GraphParseError("--family requires --n")
        inst = cf.FamilyInstance(family, args.n)
        return inst.graph(), f"{family}({args.n})", (family, args.n)
    if graph_file is not None:
        text = _read_file(graph_file)
        return read_edge_list(text), graph_file, None
    raise GraphParseError("a graph source is required (--family/--n or --graph)")


def _read_file(path_str: str) -> str:
    try:
        return Path(path_str).read_text()
    except OSError as exc:
        raise GraphParseError(f"cannot read {path_str}: {exc}") from exc


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
        print(f"wrote {out}")
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# compute
# ---------------------------------------------------------------------------


def _closed_form_result(family: str, n: int, invariant: str):
    """Formula value plus verified construction; returns (FormulaValue, certificate)."""
    g = cf.FamilyInstance(family, n).graph()
    if invariant == "alpha_mix":
        fv = cf.alpha_mix(family, n)
        cert = cf.max_mixed_independent_set(family, n)
        ok, _ = verify.is_mixed_independent_set(g, cert)
        ok = ok and len(cert) == fv.value
    elif invariant == "gamma_tm":
        fv = cf.gamma_tm(family, n)
        cert = cf.min_tmds(family, n)
        ok, _ = verify.is_total_mixed_dominating_set(g, cert)
        ok = ok and len(cert) == fv.value
    else:
        fv = cf.chi_tt(family, n)
        cert = cf.tdtc_certificate(family, n)
        ok = verify.is_tdtc(g, cert).valid and cert.num_classes == fv.value
    if not ok:
        raise AssertionError(f"closed-form certificate failed verification for {family}({n})")
    return fv, cert


def _certificate_json(invariant: str, certificate, provenance: str | None = None) -> dict:
    universe, _ = _CERT_STYLE[invariant]
    if isinstance(certificate, verify.Coloring):
        return verify.coloring_to_json(certificate, universe, provenance)
    return verify.object_set_to_json(certificate, universe, provenance)


def _cert_summary(certificate) -> str:
    if isinstance(certificate, verify.Coloring):
        return f"coloring with {certificate.num_classes} classes"
    return f"object set with {len(certificate)} elements"


def cmd_compute(args) -> int:
    g, name, family_info = _graph_source(args)
    invariant = args.invariant
    use_formula = (
        family_info is not None and invariant in FORMULA_INVARIANTS and not args.exact
    )
    if use_formula:
        family, n = family_info
        fv, cert = _closed_form_result(family, n, invariant)
        payload = {
            "invariant": invariant,
            "graph": name,
            "value": fv.value,
            "route": "closed-form",
            "case": fv.case_tag,
            "proven_optimal": True,
            "certificate": _certificate_json(invariant, cert, cf.certificate_source(family, n)
                                             if invariant == "chi_tt_d" else "closed-form"),
        }
        exhausted = False
    else:
        result = _SOLVERS[invariant](g, _budget(args))
        cert = result.certificate
        payload = {
            "invariant": invariant,
            "graph": name,
            "value": result.value,
            "route": "solver",
            "proven_optimal": result.proven_optimal,
            "nodes_explored": result.nodes_explored,
            "elapsed": round(result.elapsed, 6),
            "certificate": _certificate_json(invariant, cert),
        }
        exhausted = not result.proven_optimal

    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(f"{invariant}({name}) = {payload['value']}")
        print(f"  route: {payload['route']}" + (f" [{payload['case']}]" if "case" in payload else ""))
        print(f"  certificate: {_cert_summary(cert)}")
        if payload["route"] == "solver":
            flag = "yes" if payload["proven_optimal"] else "NO (budget exhausted; value is a bound)"
            print(f"  nodes: {payload['nodes_explored']}, elapsed: {payload['elapsed']:.3f}s, proven optimal: {flag}")
    if args.out:
        Path(args.out).write_text(json.dumps(payload["certificate"], indent=2) + "\n")
        print(f"certificate written to {args.out}")
    return EXIT_BUDGET if exhausted else EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def cmd_verify(args) -> int:
    g, name, _ = _graph_source(args)
    kind = args.kind
    cert_kind, universe, payload = verify.load_certificate(_read_file(args.certificate))

    coloring_kinds = {"proper", "tdc", "tdtc"}
    needs_mixed = {"tdtc", "tmds", "mixed-independent"}
    needs_vertex = {"tdc", "tds", "independent"}
    if kind in coloring_kinds and cert_kind != "coloring":
        raise GraphParseError(f"kind {kind!r} needs a coloring certificate, got an object set")
    if kind not in coloring_kinds and cert_kind != "set":
        raise GraphParseError(f"kind {kind!r} needs an object-set certificate, got a coloring")
    if kind in needs_mixed and universe != verify.MIXED_UNIVERSE:
        raise GraphParseError(f"kind {kind!r} needs universe 'mixed'")
    if kind in needs_vertex and universe != verify.VERTEX_UNIVERSE:
        raise GraphParseError(f"kind {kind!r} needs universe 'vertices'")

    try:
        return _run_verification(g, name, kind, universe, payload)
    except DomainError as exc:
        # a certificate that does not fit the graph is malformed for this use
        raise GraphParseError(str(exc)) from exc


def _run_verification(g, name, kind, universe, payload) -> int:
    if kind == "proper":
        if universe == verify.VERTEX_UNIVERSE:
            ok, violation = verify.is_proper_coloring(g, payload)
        else:
            ok, violation = verify.is_proper_total_coloring(g, payload)
        detail = f"monochromatic adjacent pair: {violation}" if violation else ""
    elif kind == "tds":
        ok, uncovered = verify.is_total_dominating_set(g, payload)
        detail = f"uncovered vertices: {list(uncovered)}" if uncovered else ""
    elif kind == "tmds":
        ok, uncovered = verify.is_total_mixed_dominating_set(g, payload)
        detail = f"uncovered objects: {[str(o) for o in uncovered]}" if uncovered else ""
    elif kind == "independent":
        ok, pair = verify.is_independent_set(g, payload)
        detail = f"adjacent pair in set: {pair}" if pair else ""
    elif kind == "mixed-independent":
        ok, pair = verify.is_mixed_independent_set(g, payload)
        detail = f"adjacent or incident pair in set: {pair}" if pair else ""
    else:
        report = verify.is_tdc(g, payload) if kind == "tdc" else verify.is_tdtc(g, payload)
        ok = report.valid
        if not report.proper:
            a, b, k = report.properness_violations[0]
            detail = f"improper: {a} and {b} share class {k}"
        elif report.undominated:
            detail = f"object {report.undominated[0]} dominates no color class"
        else:
            detail = ""

    if ok:
        print(f"valid {kind} certificate for {name}")
        return EXIT_OK
    print(f"INVALID {kind} certificate for {name}: {detail}")
    return EXIT_FAIL


# ---------------------------------------------------------------------------
# sweep
# ---------------------------------------------------------------------------

_SWEEP_DEFAULT_EXACT = {
    ("chi_tt_d", cf.CYCLE): 9,
    ("chi_tt_d", cf.PATH): 8,
    ("gamma_tm", cf.CYCLE): 14,
    ("gamma_tm", cf.PATH): 14,
    ("alpha_mix", cf.CYCLE): 25,
    ("alpha_mix", cf.PATH): 25,
}

_SWEEP_COLUMNS = ("family", "n", "formula_value", "solver_value", "certificate_classes", "agree", "note")


def _sweep_row(family: str, n: int, invariant: str, exact_up_to: int, certify: bool, budget) -> dict:
    start = time.perf_counter()
    g = cf.FamilyInstance(family, n).graph()
    if invariant == "chi_tt_d":
        formula = cf.chi_tt(family, n).value
        cert = cf.tdtc_certificate(family, n)
        cert_size = cert.num_classes
        cert_ok = verify.is_tdtc(g, cert).valid if certify else True
    elif invariant == "gamma_tm":
        formula = cf.gamma_tm(family, n).value
        cert = cf.min_tmds(family, n)
        cert_size = len(cert)
        cert_ok = verify.is_total_mixed_dominating_set(g, cert)[0] if certify else True
    else:
        formula = cf.alpha_mix(family, n).value
        cert = cf.max_mixed_independent_set(family, n)
        cert_size = len(cert)
        cert_ok = verify.is_mixed_independent_set(g, cert)[0] if certify else True

    solver_value: int | None = None
    note = ""
    if n <= exact_up_to:
        result = _SOLVERS[invariant](g, budget)
        if result.proven_optimal:
            solver_value = result.value
        else:
            note = "budget-exhausted"

    agree = cert_size == formula and cert_ok
    if solver_value is not None:
        agree = agree and solver_value == formula
    return {
        "family": family,
        "n": n,
        "formula_value": formula,
        "solver_value": solver_value,
        "certificate_classes": cert_size,
        "agree": agree,
        "note": note,
        "elapsed": time.perf_counter() - start,
    }


def _format_sweep_csv(rows: list[dict]) -> str:
    lines = [",".join(_SWEEP_COLUMNS)]
    for r in rows:
        solver = "" if r["solver_value"] is None else str(r["solver_value"])
        lines.append(
            f"{r['family']},{r['n']},{r['formula_value']},{solver},"
            f"{r['certificate_classes']},{'true' if r['agree'] else 'false'},{r['note']}"
        )
    return "\n".join(lines) + "\n"


def _format_sweep_text(rows: list[dict]) -> str:
    head = f"{'family':<7} {'n':>4} {'formula':>8} {'solver':>7} {'cert':>5} {'agree':>6} {'elapsed':>9}  note"
    lines = [head]
    for r in rows:
        solver = "-" if r["solver_value"] is None else str(r["solver_value"])
        lines.append(
            f"{r['family']:<7} {r['n']:>4} {r['formula_value']:>8} {solver:>7} "
            f"{r['certificate_classes']:>5} {('yes' if r['agree'] else 'NO'):>6} {r['elapsed']:>8.3f}s  {r['note']}"
        )
    return "\n".join(lines) + "\n"


def cmd_sweep(args) -> int:
    if args.from_n > args.to_n:
        raise DomainError(f"empty range {args.from_n}..{args.to_n}")
    exact_up_to = args.exact_up_to
    if exact_up_to is None:
        exact_up_to = _SWEEP_DEFAULT_EXACT[(args.invariant, args.family)]
    budget = _budget(args)
    rows = [
        _sweep_row(args.family, n, args.invariant, exact_up_to, args.certify, budget)
        for n in range(args.from_n, args.to_n + 1)
    ]
    text = _format_sweep_csv(rows) if args.format == "csv" else _format_sweep_text(rows)
    _emit(text, args.out)
    return EXIT_OK if all(r["agree"] for r in rows) else EXIT_FAIL


# ---------------------------------------------------------------------------
# ratio
# ---------------------------------------------------------------------------


def cmd_ratio(args) -> int:
    if args.from_n > args.to_n:
        raise DomainError(f"empty range {args.from_n}..{args.to_n}")
    budget = _budget(args)
    rows = []
    for n in range(args.from_n, args.to_n + 1):
        chi_tt = cf.chi_tt(args.family, n).value
        g = cf.FamilyInstance(args.family, n).graph()
        result = solvers.total_dominator_chromatic_number(g, budget)
        if not result.proven_optimal:
            rows.append((n, chi_tt, None, None))
            continue
        rows.append((n, chi_tt, result.value, chi_tt / result.value))
    if args.format == "csv":
        lines = ["family,n,chi_tt_d,chi_t_d,ratio"]
        for n, a, b, r in rows:
            if b is None:
                lines.append(f"{args.family},{n},{a},,skipped: budget exhausted")
            else:
                lines.append(f"{args.family},{n},{a},{b},{r:.4f}")
    else:
        lines = [f"{'family':<7} {'n':>4} {'chi_tt_d':>9} {'chi_t_d':>8} {'ratio':>8}"]
        for n, a, b, r in rows:
            if b is None:
                lines.append(f"{args.family:<7} {n:>4} {a:>9} {'-':>8} {'skipped':>8}")
            else:
                lines.append(f"{args.family:<7} {n:>4} {a:>9} {b:>8} {r:>8.4f}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# export
# ---------------------------------------------------------------------------


def cmd_export(args) -> int:
    what = args.what
    fmt = args.format
    if fmt is None:
        fmt = "json" if what in ("labels", "tmds", "mis", "tdtc") else "edges"

    if what in ("tmds", "mis", "tdtc"):
        g, name, family_info = _graph_source(args)
        if family_info is None:
            raise DomainError(f"--what {what} needs a --family/--n instance")
        family, n = family_info
        if fmt != "json":
            raise DomainError(f"--what {what} only supports --format json")
        if what == "tmds":
            data = verify.object_set_to_json(cf.min_tmds(family, n), verify.MIXED_UNIVERSE, "closed-form")
        elif what == "mis":
            data = verify.object_set_to_json(
                cf.max_mixed_independent_set(family, n), verify.MIXED_UNIVERSE, "closed-form"
            )
        else:
            data = verify.coloring_to_json(
                cf.tdtc_certificate(family, n), verify.MIXED_UNIVERSE, cf.certificate_source(family, n)
            )
        _emit(json.dumps(data, indent=2) + "\n", args.out)
        return EXIT_OK

    g, name, _ = _graph_source(args)
    if what == "graph":
        if fmt == "dot":
            _emit(to_dot(g), args.out)
        elif fmt == "edges":
            _emit(write_edge_list(g), args.out)
        else:
            raise DomainError("--what graph supports --format edges or dot")
    elif what == "total-graph":
        tg = total_graph(g)
        if fmt == "dot":
            _emit(total_graph_to_dot(tg), args.out)
        elif fmt == "edges":
            _emit(write_edge_list(tg.graph), args.out)
        else:
            raise DomainError("--what total-graph supports --format edges or dot")
    elif what == "line-graph":
        lg, labels = line_graph(g)
        if fmt == "dot":
            _emit(to_dot(lg, labels=labels), args.out)
        elif fmt == "edges":
            _emit(write_edge_list(lg), args.out)
        else:
            raise DomainError("--what line-graph supports --format edges or dot")
    else:  # labels
        if fmt != "json":
            raise DomainError("--what labels only supports --format json")
        _emit(labels_to_json(total_graph(g)), args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tdtc",
        description="Exact domination-coloring invariants, closed-form certificates, and verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute an invariant of a graph or family instance")
    _add_graph_source(p)
    p.add_argument("--invariant", choices=INVARIANTS, required=True)
    p.add_argument("--exact", action="store_true",
                   help="force the solver even when a closed form applies")
    _add_budget(p)
    p.add_argument("--out", help="write the certificate JSON to this file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="verify a certificate file against a graph")
    _add_graph_source(p)
    p.add_argument("--kind", choices=VERIFY_KINDS, required=True)
    p.add_argument("certificate", help="certificate JSON file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="sweep a family range, cross-checking formulas")
    p.add_argument("--family", choices=(cf.CYCLE, cf.PATH), required=True)
    p.add_argument("--from", dest="from_n", type=int, required=True)
    p.add_argument("--to", dest="to_n", type=int, required=True)
    p.add_argument("--invariant", choices=FORMULA_INVARIANTS, default="chi_tt_d")
    p.add_argument("--exact-up-to", type=int, default=None,
                   help="run the exact solver for n up to this bound")
    p.add_argument("--certify", action="store_true",
                   help="verify each constructed certificate")
    _add_budget(p)
    p.add_argument("--out", help="write the table to this file")
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("ratio", help="tabulate chi_tt_d / chi_t_d over a family range")
    p.add_argument("--family", choices=(cf.CYCLE, cf.PATH), required=True)
    p.add_argument("--from", dest="from_n", type=int, required=True)
    p.add_argument("--to", dest="to_n", type=int, required=True)
    _add_budget(p)
    p.add_argument("--out", help="write the table to this file")
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.set_defaults(func=cmd_ratio)

    p = sub.add_parser("export", help="export graphs, label maps, or certificates")
    _add_graph_source(p)
    p.add_argument("--what", choices=("graph", "total-graph", "line-graph", "labels", "tmds", "mis", "tdtc"),
                   required=True)
    p.add_argument("--format", choices=("edges", "dot", "json"), default=None)
    p.add_argument("--out", help="write to this file")
    p.set_defaults(func=cmd_export)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GraphParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
