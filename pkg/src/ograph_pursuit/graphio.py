"""Reading and writing digraphs: edge-list text, JSON objects and DOT.

Edge-list format: first non-comment line is ``n m``, followed by m lines
``u v`` (one arc each) and optional ``label v name`` lines.  ``#`` starts a
comment; blank lines are ignored.
"""

from __future__ import annotations

import json
from pathlib import Path

from .digraph import Digraph


class ParseError(ValueError):
    """Malformed graph input; the message carries the offending line number."""


def parse_edge_list(text: str) -> Digraph:
    header = None
    arcs: list[tuple[int, int]] = []
    labels: dict[int, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise ParseError(f"line {lineno}: expected header 'n m'")
            try:
                header = (int(parts[0]), int(parts[1]))
            except ValueError:
                raise ParseError(f"line {lineno}: header must be two integers") from None
            continue
        if parts[0] == "label":
            if len(parts) < 3:
                raise ParseError(f"line {lineno}: expected 'label v name'")
            try:
                v = int(parts[1])
            except ValueError:
                raise ParseError(f"line {lineno}: label vertex must be an integer") from None
            labels[v] = " ".join(parts[2:])
            continue
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected arc 'u v'")
        try:
            arcs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"line {lineno}: arc endpoints must be integers") from None
    if header is None:
        raise ParseError("line 1: empty input, expected header 'n m'")
    n, m = header
    if len(arcs) != m:
        raise ParseError(f"header announced {m} arcs but {len(arcs)} were given")
    label_seq = None
    if labels:
        bad = [v for v in labels if not 0 <= v < n]
        if bad:
            raise ParseError(f"label vertex {bad[0]} out of range for n={n}")
        label_seq = [labels.get(v, str(v)) for v in range(n)]
    try:
        return Digraph(n, arcs, labels=label_seq)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_edge_list(D: Digraph) -> str:
    lines = [f"{D.n} {D.m}"]
    lines += [f"{u} {v}" for u, v in D.arcs]
    if D.labels is not None:
        lines += [f"label {v} {D.labels[v]}" for v in range(D.n)]
    return "\n".join(lines) + "\n"


def digraph_to_json_obj(D: Digraph) -> dict:
    obj: dict = {"n": D.n, "arcs": [list(a) for a in D.arcs]}
    if D.labels is not None:
        obj["labels"] = {str(v): D.labels[v] for v in range(D.n)}
    return obj


def digraph_from_json_obj(obj: dict) -> Digraph:
    try:
        n = int(obj["n"])
        arcs = [(int(u), int(v)) for u, v in obj["arcs"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad digraph JSON object: {exc}") from None
    labels = None
    if "labels" in obj:
        table = {int(k): str(v) for k, v in obj["labels"].items()}
        labels = [table.get(v, str(v)) for v in range(n)]
    try:
        return Digraph(n, arcs, labels=labels)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def to_dot(D: Digraph) -> str:
    lines = ["digraph G {"]
    for v in range(D.n):
        lines.append(f'  {v} [label="{D.label(v)}"];')
    for u, v in D.arcs:
        lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def load_digraph(path: str | Path) -> Digraph:
    """Load a digraph file, JSON when the suffix is .json, edge list otherwise."""
    path = Path(path)
    text = path.read_text()
    if path.suffix == ".json":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: {exc}") from None
        return digraph_from_json_obj(obj)
    return parse_edge_list(text)
