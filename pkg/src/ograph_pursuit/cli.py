"""Command-line interface: solve games, build families, enumerate
orientations, run transforms and bounds, and launch the reproduction suite.

Exit codes: 0 success, 1 reproduction-check failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bounds import digraph_lower_bounds
from .digraph import Digraph, Graph, enumerate_orientations, is_strongly_connected
from .families import (alternating_bfs_orientation, basic_family,
                       copwin_orientation, fig1_counterexample, fig2_distance,
                       fig3_revisit, four_block_projective,
                       independent_set_source_orientation,
                       projective_incidence_orientation,
                       random_connected_graph, random_outerplanar_strong,
                       random_strong_ograph, ring_digraph, sts_tournament)
from .graphio import (ParseError, digraph_to_json_obj, format_edge_list,
                      load_digraph, to_dot)
from .papercheck import FAIL, run_papercheck, summary_table
from .solver import (FULLY_ACTIVE, STANDARD, GameSpec, ResourceLimitError,
                     cop_number, solve_game)
from .traces import extract_trace
from .transforms import contraction_sequence, coreset_partition, line_digraph

_VARIANTS = {"standard": STANDARD, "active": FULLY_ACTIVE}


def _emit(args, obj, text: str | None = None, dot: str | None = None) -> None:
    if args.format == "json":
        print(json.dumps(obj, indent=2, sort_keys=True))
    elif args.format == "dot":
        if dot is None:
            raise ValueError("dot output is not defined for this command")
        print(dot)
    else:
        print(text if text is not None else json.dumps(obj, indent=2,
                                                       sort_keys=True))


def _graph_output(args, D) -> None:
    """Emit a digraph (or an undirected graph) in the selected format."""
    if isinstance(D, Graph):
        lines = [f"{D.n} {D.m}"] + [f"{u} {v}" for u, v in D.edges]
        text = "\n".join(lines)
        dot = "graph G {\n" + "\n".join(f"  {u} -- {v};" for u, v in D.edges) \
              + "\n}"
        obj = {"n": D.n, "edges": [list(e) for e in D.edges],
               "undirected": True}
        _emit(args, obj, text=text, dot=dot)
    else:
        _emit(args, digraph_to_json_obj(D), text=format_edge_list(D),
              dot=to_dot(D))


# ---------------------------------------------------------------------------
# solve

def _cmd_solve(args) -> int:
    D = load_digraph(args.file)
    variant = _VARIANTS[args.variant]
    if args.k is not None:
        ks = [args.k]
    else:
        ks = list(range(1, args.k_max + 1))
    table = None
    found_k = None
    for k in ks:
        table = solve_game(D, GameSpec(k=k, variant=variant))
        if table.capture_time() is not None:
            found_k = k
            break
    summary = table.summary()
    obj = {
        "winner": summary.winner,
        "cop_number": found_k,
        "variant": args.variant,
        "capture_time": summary.capture_time,
        "initial_placements": [[D.label(v) for v in p]
                               for p in summary.optimal_placements],
    }
    text_lines = [f"winner: {summary.winner}",
                  f"cop_number: {found_k if found_k is not None else f'> {ks[-1]}'}",
                  f"capture_time: {summary.capture_time}"]
    if args.trace and found_k is not None:
        trace = extract_trace(table)
        obj["trace"] = trace.to_json_obj()
        for step in trace.steps:
            cops = ",".join(D.label(c) for c in step.cops)
            text_lines.append(f"round {step.round}: cops [{cops}] "
                              f"robber {D.label(step.robber)}")
    _emit(args, obj, text="\n".join(text_lines))
    return 0


# ---------------------------------------------------------------------------
# family

_ORIENTATION_IDS = ("copwin", "alternating-bfs", "independent-source")


def _build_family(args):
    fid = args.id
    if fid in ("cycle", "path", "out-star", "in-star", "transitive-tournament",
               "random-tournament", "petersen"):
        if fid != "petersen" and args.n is None:
            raise ValueError(f"family {fid} needs -n")
        return basic_family(fid, args.n, seed=args.seed)
    if fid == "ring":
        if args.n is None:
            raise ValueError("family ring needs -n (the outer cycle length k)")
        return ring_digraph(args.n)
    if fid == "fig1":
        return fig1_counterexample()
    if fid in ("fig2", "fig3"):
        if args.n is None:
            raise ValueError(f"family {fid} needs -n (chain length, >= 13)")
        return fig2_distance(args.n) if fid == "fig2" else fig3_revisit(args.n)
    if fid == "projective":
        if args.q is None:
            raise ValueError("family projective needs -q (2, 3 or 4)")
        return projective_incidence_orientation(args.q)
    if fid == "four-block":
        if args.q is None:
            raise ValueError("family four-block needs -q")
        return four_block_projective(args.q)
    if fid == "sts":
        if args.n is None:
            raise ValueError("family sts needs -n (= 3 mod 6, >= 9)")
        return sts_tournament(args.n, seed=args.seed)
    if fid == "outerplanar":
        if args.n is None:
            raise ValueError("family outerplanar needs -n")
        return random_outerplanar_strong(args.n, seed=args.seed)
    if fid == "random-strong":
        if args.n is None:
            raise ValueError("family random-strong needs -n")
        return random_strong_ograph(args.n, extra_arcs=args.extra,
                                    seed=args.seed)
    if fid == "random-connected":
        if args.n is None:
            raise ValueError("family random-connected needs -n")
        return random_connected_graph(args.n, extra_edges=args.extra,
                                      seed=args.seed)
    if fid in _ORIENTATION_IDS:
        if args.graph is None:
            raise ValueError(f"family {fid} orients an existing graph; "
                             f"pass --graph FILE")
        G = load_digraph(args.graph).underlying()
        if fid == "copwin":
            return copwin_orientation(G, root=args.root)
        if fid == "alternating-bfs":
            return alternating_bfs_orientation(G, root=args.root,
                                               recursive=args.recursive)
        X = [int(x) for x in args.independent_set.split(",")] \
            if args.independent_set else []
        return independent_set_source_orientation(G, X)
    raise ValueError(f"unknown family id {fid!r}")


def _cmd_family(args) -> int:
    _graph_output(args, _build_family(args))
    return 0


# ---------------------------------------------------------------------------
# enumerate

def _cmd_enumerate(args) -> int:
    G = load_digraph(args.file).underlying()
    predicate = is_strongly_connected if args.filter == "strong" else None
    total = 0
    matching = 0
    solved = []
    for D in enumerate_orientations(G):
        total += 1
        if predicate is not None and not predicate(D):
            continue
        matching += 1
        if args.solve and not args.count_only:
            solved.append({"arcs": [list(a) for a in D.arcs],
                           "cop_number": cop_number(D, k_max=args.k)})
    obj = {"total_orientations": total, "matching": matching}
    text = f"orientations: {total}\nmatching: {matching}"
    if args.solve and not args.count_only:
        obj["solved"] = solved
        counts: dict[str, int] = {}
        for entry in solved:
            key = str(entry["cop_number"])
            counts[key] = counts.get(key, 0) + 1
        obj["cop_number_counts"] = counts
        text += "\ncop numbers: " + ", ".join(
            f"{k}: {v}" for k, v in sorted(counts.items()))
    _emit(args, obj, text=text)
    return 0


# ---------------------------------------------------------------------------
# transform / bounds

def _cmd_transform(args) -> int:
    D = load_digraph(args.file)
    if args.op == "line":
        L, arc_map = line_digraph(D)
        obj = digraph_to_json_obj(L)
        obj["arc_of_vertex"] = [list(a) for a in arc_map]
        _emit(args, obj, text=format_edge_list(L), dot=to_dot(L))
    elif args.op == "coresets":
        part = coreset_partition(D)
        obj = part.to_json_obj()
        text = "\n".join(" ".join(D.label(v) for v in b) for b in part.blocks)
        _emit(args, obj, text=text)
    else:  # contract-seq
        seq = contraction_sequence(D)
        obj = seq.to_json_obj()
        text = "\n".join(
            [f"step {i}: n={d.n} m={d.m}" for i, d in enumerate(seq.iterates)]
            + [f"limit: {seq.limit_shape} cop_number {seq.limit_cop_number}"])
        _emit(args, obj, text=text, dot=to_dot(seq.limit))
    return 0


def _cmd_bounds(args) -> int:
    D = load_digraph(args.file)
    report = digraph_lower_bounds(D)
    lines = []
    for e in report.entries:
        state = f"= {e.value}" if e.applicable else "n/a"
        lines.append(f"{e.name:<20} {e.kind:<5} {state:<6} ({e.note})")
    lines.append(f"best lower bound: {report.best_lower()}")
    _emit(args, report.to_json_obj(), text="\n".join(lines))
    return 0


# ---------------------------------------------------------------------------
# papercheck

def _cmd_papercheck(args) -> int:
    results = run_papercheck(only=args.only or None, budget=args.budget,
                             jobs=args.jobs, seed=args.seed)
    if args.format == "json":
        print(json.dumps([r.to_json_obj() for r in results], indent=2,
                         sort_keys=True))
    else:
        print(summary_table(results))
    return 1 if any(r.status == FAIL for r in results) else 0


# ---------------------------------------------------------------------------

def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="ograph-pursuit",
        description="Exact cops-and-robbers analysis on oriented and "
                    "directed graphs.")
    parser.add_argument("--format", choices=("json", "text", "dot"),
                        default="text", help="output format")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for randomized constructions")
    parser.add_argument("--jobs", type=int, default=1,
                        help="worker threads for instance fan-out")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="Solve the pursuit game on a digraph.")
    p.add_argument("file", help="graph file (edge list or .json)")
    p.add_argument("-k", type=int, default=None,
                   help="fixed cop count (default: search 1..k-max)")
    p.add_argument("--k-max", type=int, default=4)
    p.add_argument("--variant", choices=sorted(_VARIANTS), default="standard")
    p.add_argument("--trace", action="store_true",
                   help="include one optimal play-out")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("family", help="Construct a named graph family.")
    p.add_argument("id", help="family id (cycle, path, out-star, in-star, "
                              "transitive-tournament, random-tournament, "
                              "petersen, ring, fig1, fig2, fig3, projective, "
                              "four-block, sts, outerplanar, random-strong, "
                              "random-connected, copwin, alternating-bfs, "
                              "independent-source)")
    p.add_argument("-n", type=int, default=None, help="size parameter")
    p.add_argument("-q", type=int, default=None, help="projective plane order")
    p.add_argument("--graph", default=None,
                   help="input graph file for orientation families")
    p.add_argument("--root", type=int, default=0, help="BFS root vertex")
    p.add_argument("--recursive", action="store_true",
                   help="recursive intra-level orientation")
    p.add_argument("--independent-set", default=None,
                   help="comma-separated vertex list")
    p.add_argument("--extra", type=int, default=0,
                   help="extra arcs/edges for random families")
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("enumerate",
                       help="Enumerate orientations of an undirected graph.")
    p.add_argument("file")
    p.add_argument("--filter", choices=("strong",), default=None)
    p.add_argument("--solve", action="store_true",
                   help="solve each matching orientation")
    p.add_argument("-k", type=int, default=4, help="cop-number search cap")
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("transform", help="Apply a digraph transformation.")
    p.add_argument("op", choices=("line", "coresets", "contract-seq"))
    p.add_argument("file")
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("bounds", help="Structural cop-number bounds.")
    p.add_argument("file")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("papercheck", help="Run the reproduction suite.")
    p.add_argument("--only", action="append", default=None,
                   help="run only this check id (repeatable)")
    p.add_argument("--budget", type=float, default=None,
                   help="total wall-clock budget in seconds")
    p.set_defaults(func=_cmd_papercheck)

    args = parser.parse_args(argv)
    try:
        return int(args.func(args))
    except (ParseError, FileNotFoundError, IsADirectoryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ResourceLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
