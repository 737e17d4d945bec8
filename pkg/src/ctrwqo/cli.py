"""Command-line front end. Every subcommand prints one JSON document.

Exit codes: 0 verified/true, 1 refuted/false, 2 input error, 3 search budget
exhausted.

Graphs are given as graph6 strings, as family specs such as ``W:3,5``, or as
paths to files of graph6 lines (the first line is used where one graph is
expected).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .antichains import (
    RELATION_OF,
    Comparison,
    Family,
    FamilySpec,
    Relation,
    check_ding_premises,
    comparability_matrix,
    make,
    predicted_relation,
)
from .canon import enumerate_connected
from .contraction import ModelSearch
from .dichotomy import dichotomy_verdict
from .errors import DisconnectedInput, GraphError, OutOfRange, SearchExhausted
from .graph import Graph, RootedGraph, is_connected, parse_graph6, write_graph6
from .lemmas import NAMES, verify_lemma
from .structure import excludes_diamond, is_clique_cactus

OK, REFUTED, INPUT_ERROR, EXHAUSTED = 0, 1, 2, 3


def _lines(path: str) -> list[str]:
    with open(path) as fh:
        return [ln.strip() for ln in fh if ln.strip() and not ln.startswith("#")]


def read_graph(text: str) -> Graph:
    if os.path.isfile(text):
        lines = _lines(text)
        if not lines:
            raise GraphError(f"{text} holds no graph")
        return read_graph(lines[0])
    name = text.partition(":")[0].upper()
    if ":" in text and name in Family.__members__:
        return make(FamilySpec.parse(text))
    return parse_graph6(text)


def read_graphs(path: str) -> list[Graph]:
    return [read_graph(ln) for ln in _lines(path)]


def read_rooted(text: str) -> RootedGraph:
    body, sep, root = text.rpartition("@")
    if not sep:
        raise GraphError(f"expected GRAPH@ROOT, got {text!r}")
    try:
        r = int(root)
    except ValueError as exc:
        raise GraphError(f"root {root!r} is not an integer") from exc
    return RootedGraph(read_graph(body), r)


def parse_range(text: str) -> list[int]:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError as exc:
        raise OutOfRange(f"bad range {text!r}; use A..B") from exc
    if b < a:
        raise OutOfRange(f"empty range {text!r}")
    return list(range(a, b + 1))


def _model_json(model) -> list[list[int]] | None:
    if model is None:
        return None
    return [sorted(model[u]) for u in range(len(model))]


# -- subcommands -----------------------------------------------------------------


def cmd_check(args):
    h, g = read_graph(args.h), read_graph(args.g)
    if not (is_connected(h) and is_connected(g)):
        raise DisconnectedInput("contraction queries need connected graphs")
    search = ModelSearch(h, g, budget=args.budget)
    model = search.run()
    doc = {"h": write_graph6(h), "g": write_graph6(g), "contraction": model is not None,
           "model": _model_json(model), "nodes": search.nodes}
    return doc, OK if model is not None else REFUTED


def cmd_check_rooted(args):
    h, g = read_rooted(args.h), read_rooted(args.g)
    if not (is_connected(h.graph) and is_connected(g.graph)):
        raise DisconnectedInput("contraction queries need connected graphs")
    search = ModelSearch(h.graph, g.graph, roots=(h.root, g.root), budget=args.budget)
    model = search.run()
    doc = {"h": write_graph6(h.graph), "h_root": h.root, "g": write_graph6(g.graph),
           "g_root": g.root, "rooted_contraction": model is not None,
           "model": _model_json(model), "nodes": search.nodes}
    return doc, OK if model is not None else REFUTED


def cmd_recognize(args):
    g = read_graph(args.g)
    if not is_connected(g):
        raise DisconnectedInput("recognition needs a connected graph")
    report = is_clique_cactus(g)
    doc = {
        "graph6": write_graph6(g),
        "clique_cactus": report.is_clique_cactus,
        "excludes_diamond": excludes_diamond(g),
        "blocks": [{"vertices": sorted(b), "kind": k.value} for b, k in report.blocks],
        "offending_blocks": [sorted(b) for b in report.offending],
    }
    return doc, OK if report else REFUTED


def cmd_dichotomy(args):
    v = dichotomy_verdict(read_graph(args.h), budget=args.budget)
    return v.to_dict(), OK


def cmd_antichain(args):
    family = Family(args.family.upper())
    values = parse_range(args.range)
    if family in (Family.W, Family.I0, Family.I1):
        specs = [FamilySpec(family, (p, q)) for p in values for q in values]
    else:
        specs = [FamilySpec(family, (r,)) for r in values]
    graphs = [make(s) for s in specs]
    matrix = comparability_matrix(graphs, budget=args.budget, workers=args.workers)
    comparable, exhausted, mismatches = [], [], []
    for i, a in enumerate(specs):
        for j, b in enumerate(specs):
            if i == j:
                continue
            entry = matrix[i][j]
            if entry is Comparison.EXHAUSTED:
                exhausted.append([str(a), str(b)])
                continue
            if entry is not Comparison.INCOMPARABLE and i < j:
                comparable.append([str(a), str(b), entry.value])
            want = predicted_relation(a, b)
            if want is not Relation.UNKNOWN and RELATION_OF[entry] is not want:
                mismatches.append([str(a), str(b), want.value, entry.value])
    doc = {
        "family": family.value,
        "members": [str(s) for s in specs],
        "matrix": [[e.value for e in row] for row in matrix],
        "comparable_pairs": comparable,
        "prediction_mismatches": mismatches,
        "exhausted_pairs": exhausted,
        "antichain": not comparable and not exhausted,
    }
    if comparable:
        return doc, REFUTED
    return doc, EXHAUSTED if exhausted else OK


def cmd_ding(args):
    report = check_ding_premises(
        parse_range(args.i), parse_range(args.q), budget=args.budget,
        workers=args.workers, downset_steps=args.downset_steps,
    )
    doc = report.to_dict()
    gem = report.gem_free.values()
    wrong = (doc["premise_iii"]["mismatches"] or any(v["violations"] for v in gem)
             or not report.i_closure_ok)
    if wrong:
        return doc, REFUTED
    if report.exhausted or any(v["exhausted"] for v in gem):
        return doc, EXHAUSTED
    return doc, OK


def cmd_enumerate(args):
    graphs = list(enumerate_connected(args.n))
    if args.filter is not None:
        graphs = [g for g in graphs if is_clique_cactus(g)]
    doc = {"n": args.n, "filter": args.filter, "count": len(graphs),
           "graphs": [write_graph6(g) for g in graphs]}
    return doc, OK


def cmd_matrix(args):
    graphs = read_graphs(args.file)
    for g in graphs:
        if not is_connected(g):
            raise DisconnectedInput(f"{write_graph6(g)} is not connected")
    matrix = comparability_matrix(graphs, budget=args.budget, workers=args.workers)
    exhausted = any(e is Comparison.EXHAUSTED for row in matrix for e in row)
    doc = {"graphs": [write_graph6(g) for g in graphs],
           "matrix": [[e.value for e in row] for row in matrix]}
    return doc, EXHAUSTED if exhausted else OK


def cmd_verify_lemma(args):
    run = verify_lemma(args.lemma, args.max_n, budget=args.budget, workers=args.workers,
                       trials=args.trials, seed=args.seed)
    doc = run.to_dict()
    failed = [it for it in run.items if not it["pass"]]
    if failed and all(it.get("exhausted") for it in failed):
        return doc, EXHAUSTED
    return doc, OK if not failed else REFUTED


COMMANDS = {
    "check": cmd_check,
    "check-rooted": cmd_check_rooted,
    "recognize": cmd_recognize,
    "dichotomy": cmd_dichotomy,
    "antichain": cmd_antichain,
    "ding-premises": cmd_ding,
    "enumerate": cmd_enumerate,
    "matrix": cmd_matrix,
    "verify-lemma": cmd_verify_lemma,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=None, metavar="NODES",
                        help="search node budget per query")
    common.add_argument("--workers", type=int, default=1, metavar="N")
    common.add_argument("--json", default=None, metavar="PATH", help="also write the report here")

    parser = argparse.ArgumentParser(prog="ctrwqo", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="is H a contraction of G")
    p.add_argument("h")
    p.add_argument("g")
    p = sub.add_parser("check-rooted", parents=[common], help="rooted contraction, H@r G@s")
    p.add_argument("h")
    p.add_argument("g")
    p = sub.add_parser("recognize", parents=[common], help="clique-cactus / diamond-free test")
    p.add_argument("g")
    p = sub.add_parser("dichotomy", parents=[common], help="wqo verdict for H-contraction-free graphs")
    p.add_argument("h")
    p = sub.add_parser("antichain", parents=[common], help="verify a family is an antichain")
    p.add_argument("action", choices=["verify"])
    p.add_argument("family", choices=[f.value for f in Family])
    p.add_argument("range", help="parameter range A..B (both parameters for W, I0, I1)")
    p = sub.add_parser("ding-premises", parents=[common], help="fundamental-antichain premises")
    p.add_argument("--i", default="3..5")
    p.add_argument("--q", default="3..5")
    p.add_argument("--downset-steps", type=int, default=1)
    p = sub.add_parser("enumerate", parents=[common], help="connected graphs on n vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--filter", choices=["clique-cactus", "diamond-free"], default=None)
    p = sub.add_parser("matrix", parents=[common], help="comparability matrix of a graph6 file")
    p.add_argument("file")
    p = sub.add_parser("verify-lemma", parents=[common], help="exhaustive structural checks")
    p.add_argument("lemma", choices=NAMES)
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--trials", type=int, default=100, help="cycleclique only")
    p.add_argument("--seed", type=int, default=0, help="cycleclique only")
    return parser


def run_report(command: str, args: argparse.Namespace) -> tuple[dict, int]:
    """Run one subcommand; return its JSON document and exit code."""
    try:
        doc, code = COMMANDS[command](args)
    except SearchExhausted as exc:
        doc, code = {"error": "budget exhausted", "nodes": exc.nodes}, EXHAUSTED
    except (GraphError, OSError) as exc:
        doc, code = {"error": str(exc), "kind": type(exc).__name__}, INPUT_ERROR
    doc = {"command": command, "exit_code": code, **doc}
    return doc, code


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    doc, code = run_report(args.command, args)
    text = dumps(doc)
    sys.stdout.write(text)
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
