"""Command-line front end.

All results go to stdout as JSON lines (keys sorted, no timestamps, so
identical invocations are byte-identical); diagnostics go to stderr.
Exit codes: 0 success, 1 domain error (bad input, guard violation,
unknown subcommand), 2 search budget exhausted.

Patterns are accepted as named families (K4, P3, S3, C6, K2,3,
theta:3,4, spider:2,1,1, tree:0-1,1-2) or as graph files in the core
text format.  Red-blue graphs use the graph text format with a color
appended to each edge line: "n m" then m lines "u v red|blue".
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from .berge import (
    BudgetExhaustedError,
    contains_berge,
    decompose_red_blue,
    find_berge_tree,
)
from .bounds import BoundSpec, evaluate
from .constructions import (
    build_pattern,
    expansion,
    near_regular_construction,
    parse_pattern_name,
    partition_construction,
    turan_graph,
    turan_hypergraph,
)
from .core import (
    BLUE,
    RED,
    Graph,
    Hypergraph,
    RedBlueGraph,
    graph_from_text,
    graph_to_text,
    hypergraph_from_text,
    hypergraph_to_text,
)
from .search import SearchConfig, construction_seed, max_berge_free, max_g_r, threshold_n0
from .symmetrization import (
    is_monochromatic,
    multipartite_classes,
    objective,
    zykov_run,
)

__all__ = ["main", "run_command"]

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_BUDGET = 2


class _CliError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    # route argparse failures through the exit-code contract
    def error(self, message):
        raise _CliError(message)


def _load_pattern(token: str) -> Graph:
    if os.path.exists(token):
        return graph_from_text(Path(token).read_text())
    return build_pattern(parse_pattern_name(token))


def _load_hypergraph(path: str) -> Hypergraph:
    return hypergraph_from_text(Path(path).read_text())


def _load_redblue(path: str) -> RedBlueGraph:
    lines = [l.split() for l in Path(path).read_text().splitlines() if l.strip()]
    if not lines or len(lines[0]) != 2:
        raise ValueError("red-blue header must be 'n m'")
    n, m = map(int, lines[0])
    if len(lines) - 1 != m:
        raise ValueError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    colors = {}
    for row in lines[1:]:
        if len(row) != 3 or row[2] not in (RED, BLUE):
            raise ValueError(f"edge line must be 'u v red|blue': {' '.join(row)!r}")
        u, v = int(row[0]), int(row[1])
        edges.append((u, v))
        colors[(min(u, v), max(u, v))] = row[2]
    return RedBlueGraph(Graph(n, edges), colors)


def _redblue_json(g: RedBlueGraph) -> dict:
    return {
        "n": g.graph.n,
        "edges": [[u, v, c] for (u, v), c in zip(g.graph.edges, g.colors)],
    }


def _search_config(args, seed=None) -> SearchConfig:
    kwargs = {}
    if getattr(args, "budget", None):
        kwargs["node_budget"] = args.budget
    jobs = getattr(args, "jobs", None)
    if jobs is None and hasattr(args, "jobs"):
        jobs = os.cpu_count() or 1  # results are parallelism-independent
    if jobs:
        kwargs["parallelism"] = jobs
    if seed is not None:
        kwargs["seed_witness"] = seed
    return SearchConfig(**kwargs)


# ---------------------------------------------------------------------------
# Command handlers: each returns (exit_code, list of JSON-able dicts)
# ---------------------------------------------------------------------------

def _cmd_check_berge(args):
    h = _load_hypergraph(args.hypergraph)
    f = _load_pattern(args.pattern)
    finder = find_berge_tree if args.tree_greedy else contains_berge
    cert = finder(h, f, node_budget=args.budget)
    record = {
        "command": "check-berge",
        "contains": cert is not None,
        "certificate": cert.to_json_dict() if cert else None,
    }
    return EXIT_OK, [record]


def _cmd_decompose(args):
    h = _load_hypergraph(args.hypergraph)
    dec = decompose_red_blue(h)
    record = {
        "command": "decompose",
        "hyperedges": len(h.edges),
        "bound": dec.bound,
        "shadow": _redblue_json(dec.shadow),
        "pairOrigin": [[[u, v], idx] for (u, v), idx in dec.pair_origin],
    }
    return EXIT_OK, [record]


def _cmd_search(args):
    f = _load_pattern(args.pattern)
    seed = None if args.no_seed else construction_seed(args.n, args.r, f)
    result = max_berge_free(args.n, args.r, f, _search_config(args, seed))
    record = {
        "command": "search",
        "n": args.n,
        "r": args.r,
        "optimum": result.optimum,
        "exact": result.exact,
        "nodes": result.nodes_explored,
        "witness": hypergraph_to_text(result.witness) if result.witness else None,
    }
    return (EXIT_OK if result.exact else EXIT_BUDGET), [record]


def _cmd_g_r_search(args):
    result = max_g_r(args.n, args.k, args.r, _search_config(args))
    record = {
        "command": "g-r-search",
        "n": args.n,
        "k": args.k,
        "r": args.r,
        "optimum": result.optimum,
        "exact": result.exact,
        "nodes": result.nodes_explored,
        "witness": _redblue_json(result.witness) if result.witness else None,
    }
    return (EXIT_OK if result.exact else EXIT_BUDGET), [record]


def _cmd_bound(args):
    params = {}
    for name in ("k", "r", "n", "t", "delta", "lower"):
        value = getattr(args, name, None)
        if value is not None:
            params[name] = value
    ex_input = None
    if args.ex_input is not None:
        ex_input = Fraction(args.ex_input)
    if args.ex_f is not None or args.ex_kr_f is not None:
        ex_input = {}
        if args.ex_kr_f is not None:
            ex_input["ex_kr_f"] = Fraction(args.ex_kr_f)
        if args.ex_f is not None:
            ex_input["ex_f"] = Fraction(args.ex_f)
    value = evaluate(BoundSpec(args.theorem, params, ex_input))
    record = {"command": "bound", "theorem": args.theorem}
    record.update(value.to_json_dict())
    return EXIT_OK, [record]


def _cmd_construct(args):
    family = args.family
    if family == "pattern":
        g = _load_pattern(args.pattern)
        payload = {"format": "graph", "text": graph_to_text(g)}
    elif family == "turan-graph":
        g = turan_graph(args.n, args.parts)
        payload = {"format": "graph", "text": graph_to_text(g)}
    elif family == "turan-hypergraph":
        h = turan_hypergraph(args.n, args.parts, args.r)
        payload = {"format": "hypergraph", "text": hypergraph_to_text(h)}
    elif family == "partition":
        h = partition_construction(args.n, args.k, args.r)
        payload = {"format": "hypergraph", "text": hypergraph_to_text(h)}
    elif family == "near-regular":
        h = near_regular_construction(args.n, args.k, args.r)
        payload = {"format": "hypergraph", "text": hypergraph_to_text(h)}
    elif family == "expansion":
        h = expansion(_load_pattern(args.pattern), args.r)
        payload = {"format": "hypergraph", "text": hypergraph_to_text(h)}
    else:
        raise _CliError(f"unknown construction family {family!r}")
    record = {"command": "construct", "family": family}
    record.update(payload)
    return EXIT_OK, [record]


def _cmd_symmetrize(args):
    g0 = _load_redblue(args.redblue)
    trace = zykov_run(g0, args.k, args.r, verify=args.verify)
    records = [dict(step.to_json_dict(), command="symmetrize-step")
               for step in trace.steps]
    final = trace.final
    records.append({
        "command": "symmetrize",
        "steps": len(trace.steps),
        "gr": objective(final, args.r)[0],
        "final": _redblue_json(final),
        "monochromatic": is_monochromatic(final),
        "completeMultipartite": multipartite_classes(final.graph) is not None,
    })
    return EXIT_OK, records


def _cmd_threshold(args):
    report = threshold_n0(args.k, args.r, args.n_max, _search_config(args))
    records = [{
        "command": "threshold-row",
        "n": row.n,
        "turanEdges": row.turan_edges,
        "optimum": row.optimum,
        "turanOptimal": row.turan_optimal,
    } for row in report.rows]
    records.append({
        "command": "threshold",
        "k": report.k,
        "r": report.r,
        "threshold": report.threshold,
        "verifiedUpTo": report.verified_up_to,
    })
    return EXIT_OK, records


def _cmd_verify_corpus(args):
    manifest = Path(args.path) / "manifest.json"
    if not manifest.is_file():
        raise _CliError(f"missing manifest: {manifest}")
    entries = json.loads(manifest.read_text())
    failures = 0
    records = []
    for i, entry in enumerate(entries):
        argv = [entry["command"], *entry["args"]]
        try:
            code, got = run_command(argv, cwd=args.path)
        except (BudgetExhaustedError, ValueError, OSError) as exc:
            code, got = EXIT_DOMAIN_ERROR, [{"error": str(exc)}]
        ok = got == entry["expected"] and code == entry.get("exitCode", 0)
        failures += 0 if ok else 1
        record = {"entry": i, "command": entry["command"], "ok": ok}
        if not ok:
            record["got"] = got
            record["expected"] = entry["expected"]
        records.append(record)
    records.append({
        "command": "verify-corpus",
        "entries": len(entries),
        "failures": failures,
    })
    return (EXIT_OK if failures == 0 else EXIT_DOMAIN_ERROR), records


# ---------------------------------------------------------------------------
# Argument wiring
# ---------------------------------------------------------------------------

def _build_parser() -> _Parser:
    parser = _Parser(prog="bergeturan",
                     description="Exact computations for Berge-Turan problems")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("check-berge", help="test Berge-pattern containment")
    p.add_argument("--hypergraph", required=True)
    p.add_argument("--pattern", required=True)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--tree-greedy", action="store_true",
                   help="try the greedy tree embedding before the exact search")
    p.set_defaults(func=_cmd_check_berge)

    p = sub.add_parser("decompose", help="red-blue shadow decomposition")
    p.add_argument("--hypergraph", required=True)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("search", help="maximize hyperedges avoiding a Berge pattern")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--pattern", required=True)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--jobs", type=int, default=None,
                   help=f"worker processes (default {os.cpu_count() or 1})")
    p.add_argument("--no-seed", action="store_true",
                   help="skip the construction-based lower-bound seed")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("g-r-search", help="maximize g_r over K_k-free red-blue graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=_cmd_g_r_search)

    p = sub.add_parser("bound", help="evaluate a closed-form bound exactly")
    p.add_argument("--theorem", required=True)
    for name in ("k", "r", "n", "t", "delta", "lower"):
        p.add_argument(f"--{name}", type=int, default=None)
    p.add_argument("--ex-input", default=None,
                   help="exact ex(n, F) input as an integer or fraction p/q")
    p.add_argument("--ex-f", default=None, help="sandwich: exact ex(n, F)")
    p.add_argument("--ex-kr-f", default=None, help="sandwich: exact ex(n, K_r, F)")
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("construct", help="emit a construction in text format")
    p.add_argument("--family", required=True,
                   choices=["pattern", "turan-graph", "turan-hypergraph",
                            "partition", "near-regular", "expansion"])
    p.add_argument("--pattern", default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--parts", type=int, default=None)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("symmetrize", help="greedy Zykov run on a red-blue graph")
    p.add_argument("--redblue", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=_cmd_symmetrize)

    p = sub.add_parser("threshold", help="empirical Turan-optimality threshold")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--jobs", type=int, default=None)
    p.set_defaults(func=_cmd_threshold)

    p = sub.add_parser("verify-corpus", help="run a corpus manifest and compare")
    p.add_argument("path")
    p.set_defaults(func=_cmd_verify_corpus)

    return parser


def run_command(argv, cwd: str | None = None):
    """Parse and run one invocation; returns (exit_code, records)."""
    parser = _build_parser()
    args = parser.parse_args(argv)
    if cwd is not None:
        previous = os.getcwd()
        os.chdir(cwd)
        try:
            return args.func(args)
        finally:
            os.chdir(previous)
    return args.func(args)


def main(argv=None) -> int:
    try:
        code, records = run_command(list(sys.argv[1:] if argv is None else argv))
    except BudgetExhaustedError as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (_CliError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN_ERROR
    for record in records:
        print(json.dumps(record, sort_keys=True))
    return code


if __name__ == "__main__":
    sys.exit(main())
