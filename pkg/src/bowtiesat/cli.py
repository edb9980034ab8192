"""Command-line entry point: verify, construct, search, cases, table, graph.

Exit codes: 0 success, 1 property violated, 2 input error, 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from pathlib import Path

from . import constructions as cons
from . import lemmacases
from .exact_search import (DOMINATING, INDEPENDENT_DOMINATING, MODES, OracleTooLarge,
                           SearchBudgetExceeded, SearchProblem, brute_force_oracle, solve)
from .graphs import (FIXTURES, GraphFormatError, SimpleGraph, efficient_dominating_sets, girth,
                     independence_number, load_fixture, parse_graph, square, to_edge_list, to_graph6)
from .hypercore import HypergraphError, ParseError, parse_hypergraph, twin_pairs, weight_diagnostics
from .johnson import GraphTooLarge, JohnsonGraph, build
from .saturation import Unsupported, check, closed_form

EXIT_OK, EXIT_VIOLATED, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class InputError(Exception):
    pass


def _emit(obj, as_json: bool, human=None):
    if as_json or human is None:
        print(json.dumps(obj, sort_keys=False))
    else:
        print(human(obj))


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def load_graph(source: str, fmt: str = "auto") -> SimpleGraph:
    """A file path, `fixture:NAME`, or a path whose basename is a packaged fixture."""
    if source.startswith("fixture:"):
        return load_fixture(source.split(":", 1)[1])
    p = Path(source)
    if not p.exists() and p.stem in FIXTURES:
        return load_fixture(p.stem)
    return parse_graph(_read(source), fmt)


# ---- verify ----------------------------------------------------------------

def cmd_verify(args) -> int:
    h = parse_hypergraph(_read(args.file))
    rep = check(h)
    out = {"file": args.file, "n": h.n, "k": h.k, "edges": len(h), **rep.to_dict()}
    if args.diagnostics:
        d = weight_diagnostics(h)
        out["twin_pairs"] = [list(p) for p in twin_pairs(h)]
        out["special_edges"] = [list(e) for e in d.special_edges]
        out["heavy_normal_edges"] = [list(e) for e in d.heavy_normal_edges]
        out["weight_problems"] = d.problems

    def human(o):
        lines = [f"{o['file']}: n={o['n']} k={o['k']} edges={o['edges']}",
                 f"  bowtie-free     {o['bowtie_free']}" + (f"  witness {o['bowtie']}" if o["bowtie"] else ""),
                 f"  semi-saturated  {o['semi_saturated']}" + (f"  counterexample {o['unforced']}" if o["unforced"] else ""),
                 f"  saturated       {o['saturated']}"]
        return "\n".join(lines)

    _emit(out, args.json, human)
    wanted = {"saturated": rep.saturated, "semi-saturated": rep.semi_saturated,
              "bowtie-free": rep.bowtie_free}[args.require]
    return EXIT_OK if wanted else EXIT_VIOLATED


# ---- construct -------------------------------------------------------------

def _int_list(s: str | None) -> list[int] | None:
    if s is None:
        return None
    return [int(x) for x in s.replace(",", " ").split()] if s.strip() else []


def cmd_construct(args) -> int:
    fam = args.family
    graph_out = None
    try:
        if fam in ("sat2", "sat3", "sat4", "wsat4") and args.n is None:
            raise InputError(f"{fam} needs n")
        if fam == "complete":
            h = cons.complete(args.n, args.k)
        elif fam == "fano":
            h = cons.fano_complement()
        elif fam == "sat2":
            h = cons.sat2_construction(args.n)
        elif fam == "sat3":
            h = cons.sat3_construction(args.n)
        elif fam == "sat4":
            h = cons.sat4_construction(args.n, _int_list(args.V), _int_list(args.W))
        elif fam == "wsat4":
            h = cons.wsat4_construction(args.n)
        elif fam == "dual":
            if not args.graph:
                raise InputError("dual needs --graph")
            g = load_graph(args.graph, args.format)
            h = cons.dual_hypergraph(g, args.k if args.k else (g.regular_degree() or 0))
        elif fam == "sharpcon":
            if not args.graph:
                raise InputError("sharpcon needs --graph")
            g = load_graph(args.graph, args.format)
            res = cons.sharpcon(g, _int_list(args.centers))
            h = res.hypergraph
            graph_out = to_edge_list(res.modified_graph, "modified graph G' (centers split into v_i, w_i)")
        else:
            raise InputError(f"unknown family {fam}")
    except cons.ConstructionError as exc:
        raise InputError(str(exc)) from None
    text = h.to_text(f"{fam} n={h.n} k={h.k} edges={len(h)}")
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    if graph_out is not None and args.graph_out:
        Path(args.graph_out).write_text(graph_out)
    if args.check:
        rep = check(h)
        print(json.dumps({"family": fam, "edges": len(h), **rep.to_dict()}), file=sys.stderr)
        ok = rep.semi_saturated if fam in ("dual", "sharpcon", "wsat4") else rep.saturated
        return EXIT_OK if ok else EXIT_VIOLATED
    return EXIT_OK


# ---- search ----------------------------------------------------------------

def _vertex_list(graph, items) -> frozenset[int] | None:
    """Indices, or k-sets (lists) when the graph is a Johnson graph."""
    if items is None:
        return None
    out = set()
    for it in items:
        if isinstance(it, list):
            if not isinstance(graph, JohnsonGraph):
                raise InputError("k-set vertices need a johnson graph source")
            out.add(graph.rank(it))
        else:
            out.add(int(it))
    return frozenset(out)


def problem_from_dict(d: dict) -> SearchProblem:
    """JSON problem: {"graph": {"johnson": [n, k]} | {"edge_list": path} |
    {"graph6": str} | {"fixture": name}, "mode", "required", "allowed",
    "dominate", "max_size", "witness_cap", "node_budget"}."""
    src = d.get("graph")
    if not isinstance(src, dict) or len(src) != 1:
        raise InputError("problem needs a single graph source")
    (kind, val), = src.items()
    if kind == "johnson":
        graph = build(*val)
    elif kind == "edge_list":
        graph = parse_graph(_read(val), "edge-list")
    elif kind == "graph6":
        graph = parse_graph(val, "graph6")
    elif kind == "fixture":
        graph = load_fixture(val)
    else:
        raise InputError(f"unknown graph source {kind!r}")
    mode = d.get("mode", INDEPENDENT_DOMINATING)
    if mode not in MODES:
        raise InputError(f"mode must be one of {MODES}")
    try:
        return SearchProblem(
            graph, mode,
            required=_vertex_list(graph, d.get("required")) or frozenset(),
            allowed=_vertex_list(graph, d.get("allowed")),
            dominate=_vertex_list(graph, d.get("dominate")),
            upper_bound=d.get("max_size"),
            witness_cap=d.get("witness_cap", 20),
            node_budget=d.get("node_budget"),
        )
    except ValueError as exc:
        raise InputError(str(exc)) from None


def cmd_search(args) -> int:
    if args.problem:
        try:
            d = json.loads(_read(args.problem))
        except json.JSONDecodeError as exc:
            raise InputError(f"{args.problem}: invalid JSON at line {exc.lineno}: {exc.msg}") from None
    else:
        if args.source == "johnson":
            if len(args.params) != 3:
                raise InputError("usage: search johnson N K MODE")
            n, k, mode = int(args.params[0]), int(args.params[1]), args.params[2]
            d = {"graph": {"johnson": [n, k]}, "mode": mode}
        elif args.source == "graph":
            if len(args.params) != 2:
                raise InputError("usage: search graph PATH MODE")
            g = load_graph(args.params[0])
            d = {"graph": {"graph6": to_graph6(g)}, "mode": args.params[1]}
        else:
            raise InputError("give `johnson N K MODE`, `graph PATH MODE` or --problem FILE")
    for key, val in (("max_size", args.max_size), ("witness_cap", args.witnesses),
                     ("node_budget", args.node_budget)):
        if val is not None:
            d[key] = val
    p = problem_from_dict(d)
    res = solve(p, threads=args.threads)
    labels = p.graph.unrank if isinstance(p.graph, JohnsonGraph) else None
    out = {"problem": {k: v for k, v in d.items()}, "result": res.to_dict(labels)}
    status = EXIT_OK
    if args.oracle:
        orc = brute_force_oracle(p)
        same = (orc.optimum == res.optimum and orc.count == res.count)
        out["oracle"] = {"optimum": orc.optimum if orc.feasible else None, "count": orc.count,
                         "agrees": same}
        if not same:
            status = EXIT_VIOLATED

    def human(o):
        r = o["result"]
        line = (f"optimum {r['optimum']} count {r['count']}" if r["feasible"]
                else "infeasible (no solution within the size limit)")
        line += f"  nodes {r['nodes_explored']}  {r['elapsed_s']}s"
        if "oracle" in o:
            line += f"\noracle: optimum {o['oracle']['optimum']} count {o['oracle']['count']}" \
                    f" -> {'agrees' if o['oracle']['agrees'] else 'DISAGREES'}"
        return line

    _emit(out, args.json, human)
    return status


# ---- cases -----------------------------------------------------------------

def cmd_cases(args) -> int:
    which = ["p3", "p4", "s4"] if args.which == "all" else [args.which]
    summaries = []
    for name in which:
        reports = list(lemmacases.CASES[name]())
        summary = lemmacases.summarize(name.upper(), reports)
        summaries.append(summary)
        if args.jsonl:
            for r in reports:
                print(json.dumps(r.to_dict()))
            print(json.dumps(summary.to_dict()))
        elif args.verbose:
            for r in reports:
                print(f"{r.case:14} {r.verdict:8} {json.dumps(r.subcase)} {json.dumps(r.quantities)}")
        if args.diagnostic:
            diag_reports = list(lemmacases.DIAGNOSTICS[name]())
            diag = lemmacases.summarize(diag_reports[0].case if diag_reports else name, diag_reports)
            diag.subcase = {"summary": True, "diagnostic": True}
            if name == "p3":
                alt = sum(r.quantities["alt_verdict"] == lemmacases.FAIL for r in reports)
                diag.quantities["primary_alt_reading_failures"] = alt
            if args.jsonl:
                print(json.dumps(diag.to_dict()))
            else:
                _print_summary(diag)
    if not args.jsonl:
        print(f"{'case':14} {'verdict':8} subcases  pass  fail  vacuous")
        for s in summaries:
            _print_summary(s)
    overall = all(s.verdict == lemmacases.PASS for s in summaries)
    if args.jsonl and len(summaries) > 1:
        print(json.dumps({"case": "ALL", "verdict": "pass" if overall else "fail"}))
    elif not args.jsonl:
        print(f"overall: {'PASS' if overall else 'FAIL'}")
    return EXIT_OK if overall else EXIT_VIOLATED


def _print_summary(s):
    c = s.counters
    print(f"{s.case:14} {s.verdict:8} {c['subcases']:8} {c['pass']:5} {c['fail']:5} {c['vacuous']:8}")


# ---- table -----------------------------------------------------------------

def _parse_range(text: str) -> range:
    if ".." in text:
        a, b = text.split("..")
        return range(int(a), int(b) + 1)
    return range(int(text), int(text) + 1)


_CONSTRUCT = {2: cons.sat2_construction, 3: cons.sat3_construction, 4: cons.sat4_construction}
FULL_SOLVE_LIMIT = 100  # Johnson graphs up to this many vertices are solved outright


def table_row(n: int, k: int, kind: str, node_budget: int | None = None) -> dict:
    row = {"n": n, "k": k, "kind": kind}
    try:
        cf = closed_form(n, k, kind)
    except Unsupported as exc:
        return dict(row, status="UNSUPPORTED", note=str(exc))
    row["closed_form"] = cf.value if cf.exact else [cf.lower, cf.upper]
    mode = INDEPENDENT_DOMINATING if kind == "sat" else DOMINATING
    try:
        j = build(n, k, max_vertices=4096)
    except GraphTooLarge:
        return dict(row, status="BUDGET", note="Johnson graph too large")
    t0 = time.perf_counter()
    try:
        if j.size <= FULL_SOLVE_LIMIT or not cf.exact:
            res = solve(SearchProblem(j, mode, witness_cap=1, node_budget=node_budget))
            row["search"] = res.optimum
            row["method"] = "exact search"
        else:
            # no solution below the formula value, and a construction reaching it
            res = solve(SearchProblem(j, mode, upper_bound=cf.value - 1, witness_cap=1,
                                      node_budget=node_budget))
            if res.feasible:
                row["search"] = res.optimum
                row["method"] = f"bounded search (<= {cf.value - 1})"
            else:
                h = _CONSTRUCT[k](n)
                rep = check(h)
                ok = rep.saturated if kind == "sat" else rep.semi_saturated
                row["search"] = len(h) if ok else None
                row["method"] = f"none <= {cf.value - 1}; construction verified"
    except SearchBudgetExceeded:
        row["elapsed_s"] = round(time.perf_counter() - t0, 3)
        return dict(row, status="BUDGET")
    row["elapsed_s"] = round(time.perf_counter() - t0, 3)
    v = row["search"]
    if v is None:
        row["status"] = "MISMATCH"
    elif cf.exact:
        row["status"] = "MATCH" if v == cf.value else "MISMATCH"
    else:
        row["status"] = "WITHIN" if cf.lower <= v <= cf.upper else "MISMATCH"
    return row


def cmd_table(args) -> int:
    rows = [table_row(n, args.k, args.kind, args.node_budget) for n in _parse_range(args.n)]
    if args.json:
        for r in rows:
            print(json.dumps(r))
    else:
        print(f"{'n':>3} {'k':>2} {'kind':5} {'closed form':>12} {'search':>7}  status")
        for r in rows:
            cf = r.get("closed_form", "-")
            cf = f"[{cf[0]},{cf[1]}]" if isinstance(cf, list) else str(cf)
            print(f"{r['n']:>3} {r['k']:>2} {r['kind']:5} {cf:>12} {str(r.get('search', '-')):>7}  "
                  f"{r['status']}  {r.get('method', r.get('note', ''))}")
    statuses = {r["status"] for r in rows}
    if "MISMATCH" in statuses:
        return EXIT_VIOLATED
    if "BUDGET" in statuses:
        return EXIT_BUDGET
    if "UNSUPPORTED" in statuses:
        return EXIT_INPUT
    return EXIT_OK


# ---- graph -----------------------------------------------------------------

def cmd_graph(args) -> int:
    g = load_graph(args.file, args.format)
    if args.action == "info":
        gg = girth(g)
        out = {"vertices": g.n, "edges": g.num_edges(), "regular_degree": g.regular_degree(),
               "girth": gg if gg != math.inf else None, "graph6": to_graph6(g)}
    elif args.action == "girth":
        gg = girth(g)
        out = {"girth": gg if gg != math.inf else None}
    elif args.action == "square":
        sq = square(g)
        if args.json:
            out = {"graph6": to_graph6(sq), "edges": sq.num_edges()}
        else:
            sys.stdout.write(to_edge_list(sq, "square graph"))
            return EXIT_OK
    elif args.action == "eds":
        codes = efficient_dominating_sets(g, limit=args.limit)
        out = {"efficient_dominating_sets": [list(c) for c in codes], "count": len(codes)}
    elif args.action == "alpha":
        target = square(g) if args.square else g
        out = {"independence_number": independence_number(target), "square": args.square}
    else:
        raise InputError(f"unknown action {args.action}")
    print(json.dumps(out))
    return EXIT_OK


# ---- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bowtiesat", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="check bow-tie freeness and (semi-)saturation of a hypergraph file")
    v.add_argument("file")
    v.add_argument("--require", choices=["saturated", "semi-saturated", "bowtie-free"], default="saturated")
    v.add_argument("--diagnostics", action="store_true", help="add twin and 1/deg weight diagnostics")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("construct", help="emit a hypergraph from one of the families")
    c.add_argument("family", choices=["complete", "fano", "sat2", "sat3", "sat4", "wsat4", "dual", "sharpcon"])
    c.add_argument("n", nargs="?", type=int)
    c.add_argument("--k", type=int, default=4)
    c.add_argument("--V", help="sat4, n >= 12: vertices joined to {1,2,3}")
    c.add_argument("--W", help="sat4, n >= 12: vertices joined to {8,9,10}")
    c.add_argument("--graph", help="graph file (or fixture:NAME) for dual / sharpcon")
    c.add_argument("--format", default="auto", choices=["auto", "graph6", "edge-list"])
    c.add_argument("--centers", help="sharpcon: efficient dominating set to split")
    c.add_argument("-o", "--output")
    c.add_argument("--graph-out", help="sharpcon: write the modified graph here")
    c.add_argument("--check", action="store_true", help="verify the output (report on stderr)")
    c.set_defaults(func=cmd_construct)

    s = sub.add_parser("search", help="exact minimum (independent) dominating set search")
    s.add_argument("source", nargs="?", choices=["johnson", "graph"])
    s.add_argument("params", nargs="*")
    s.add_argument("--problem", help="JSON problem description")
    s.add_argument("--max-size", type=int)
    s.add_argument("--witnesses", type=int)
    s.add_argument("--node-budget", type=int)
    s.add_argument("--threads", type=int, default=int(os.environ.get("BOWTIESAT_THREADS", "1")))
    s.add_argument("--oracle", action="store_true", help="also run the brute-force oracle and compare")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_search)

    k = sub.add_parser("cases", help="run the finite P3, P4 and S4 case checks")
    k.add_argument("which", choices=["p3", "p4", "s4", "all"])
    k.add_argument("--jsonl", action="store_true")
    k.add_argument("--verbose", action="store_true")
    k.add_argument("--diagnostic", action="store_true",
                   help="also run the wider enumerations and report them separately")
    k.set_defaults(func=cmd_cases)

    t = sub.add_parser("table", help="closed forms next to exact-search values")
    t.add_argument("--k", type=int, required=True)
    t.add_argument("--n", required=True, help="A..B")
    t.add_argument("--kind", choices=["sat", "wsat"], default="sat")
    t.add_argument("--node-budget", type=int)
    t.add_argument("--json", action="store_true")
    t.set_defaults(func=cmd_table)

    g = sub.add_parser("graph", help="simple-graph utilities")
    g.add_argument("action", choices=["info", "girth", "square", "eds", "alpha"])
    g.add_argument("file", help="graph file or fixture:NAME")
    g.add_argument("--format", default="auto", choices=["auto", "graph6", "edge-list"])
    g.add_argument("--limit", type=int, help="eds: stop after this many")
    g.add_argument("--square", action="store_true", help="alpha: of the square graph")
    g.add_argument("--json", action="store_true")
    g.set_defaults(func=cmd_graph)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ParseError, GraphFormatError, HypergraphError, Unsupported,
            GraphTooLarge, OracleTooLarge, KeyError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_INPUT
    except SearchBudgetExceeded as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
