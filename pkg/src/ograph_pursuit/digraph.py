"""Directed-graph data model, structural queries and orientation enumeration.

Vertices are always ``0..n-1``.  A :class:`Digraph` is a simple digraph (no
loops, no parallel arcs); both ``(u, v)`` and ``(v, u)`` may be present, and
``is_oriented`` reports whether they never are.  :class:`Graph` is the
undirected companion used for orientation constructions and bounds.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

INFINITE = math.inf

# 2^m orientations are enumerated explicitly; keep m small enough to finish.
MAX_ORIENTATION_EDGES = 30


class Digraph:
    """Immutable simple directed graph on vertices ``0..n-1``.

    ``labels`` are display names only: they travel through serialization and
    DOT output but do not take part in equality or hashing.  ``meta`` is an
    optional free-form dict for construction certificates (also ignored by
    equality).
    """

    __slots__ = ("n", "arcs", "out_adj", "in_adj", "labels", "meta")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = (),
                 labels: Sequence[str] | None = None, meta: dict | None = None):
        n = int(n)
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        arcset = set()
        for u, v in arcs:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop ({u}, {u}) not allowed")
            arcset.add((u, v))
        self.n = n
        self.arcs = tuple(sorted(arcset))
        out: list[list[int]] = [[] for _ in range(n)]
        inc: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.arcs:
            out[u].append(v)
            inc[v].append(u)
        self.out_adj = tuple(tuple(vs) for vs in out)
        self.in_adj = tuple(tuple(us) for us in inc)
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise ValueError("labels must name every vertex")
        self.labels = labels
        self.meta = dict(meta) if meta else None

    @property
    def m(self) -> int:
        return len(self.arcs)

    def out_deg(self, v: int) -> int:
        return len(self.out_adj[v])

    def in_deg(self, v: int) -> int:
        return len(self.in_adj[v])

    def has_arc(self, u: int, v: int) -> bool:
        return v in self.out_adj[u]

    @property
    def is_oriented(self) -> bool:
        """True when no pair of opposite arcs (digon) is present."""
        arcset = set(self.arcs)
        return all((v, u) not in arcset for u, v in self.arcs)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def sources(self) -> list[int]:
        return [v for v in range(self.n) if not self.in_adj[v]]

    def sinks(self) -> list[int]:
        return [v for v in range(self.n) if not self.out_adj[v]]

    def underlying(self) -> "Graph":
        return Graph(self.n, ((min(u, v), max(u, v)) for u, v in self.arcs))

    def with_meta(self, **meta) -> "Digraph":
        merged = dict(self.meta or {})
        merged.update(meta)
        return Digraph(self.n, self.arcs, self.labels, merged)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.arcs == other.arcs

    def __hash__(self) -> int:
        return hash((self.n, self.arcs))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, m={self.m})"


class Graph:
    """Simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        n = int(n)
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        edgeset = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop ({u}, {u}) not allowed")
            edgeset.add((min(u, v), max(u, v)))
        self.n = n
        self.edges = tuple(sorted(edgeset))
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self.adj = tuple(tuple(sorted(vs)) for vs in adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in set(self.edges)

    def bfs_levels(self, root: int) -> list[int]:
        """Distance from root per vertex; -1 for unreachable vertices."""
        dist = [-1] * self.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in self.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def connected_components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = []
            queue = deque([s])
            seen[s] = True
            while queue:
                u = queue.popleft()
                comp.append(u)
                for w in self.adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.connected_components()) == 1

    def diameter(self):
        """Longest shortest path; INFINITE when disconnected, 0 for n <= 1."""
        if self.n <= 1:
            return 0
        best = 0
        for v in range(self.n):
            dist = self.bfs_levels(v)
            if min(dist) < 0:
                return INFINITE
            best = max(best, max(dist))
        return best

    def girth(self):
        """Length of a shortest cycle; INFINITE for forests."""
        best = INFINITE
        for root in range(self.n):
            dist = [-1] * self.n
            parent = [-1] * self.n
            dist[root] = 0
            queue = deque([root])
            while queue:
                u = queue.popleft()
                if 2 * dist[u] >= best - 1:
                    continue
                for w in self.adj[u]:
                    if dist[w] < 0:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        queue.append(w)
                    elif parent[u] != w:
                        best = min(best, dist[u] + dist[w] + 1)
        return best

    def induced_subgraph(self, vertices: Sequence[int]) -> tuple["Graph", list[int]]:
        """Subgraph on ``vertices``; returns it with the new->old vertex map."""
        keep = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        edges = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        return Graph(len(keep), edges), keep

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def bidirected(G: Graph) -> Digraph:
    """The digraph with both directions of every edge of G (undirected play)."""
    arcs = []
    for u, v in G.edges:
        arcs.append((u, v))
        arcs.append((v, u))
    return Digraph(G.n, arcs)


def strong_components(D: Digraph) -> tuple[list[list[int]], bool]:
    """Strongly connected components (sorted by smallest member) and whether D is strong."""
    n = D.n
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] >= 0:
            continue
        # Iterative Tarjan: work entries are (vertex, next-child-pointer).
        work = [(root, 0)]
        while work:
            v, pi = work.pop()
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            for i in range(pi, len(D.out_adj[v])):
                w = D.out_adj[v][i]
                if index[w] < 0:
                    work.append((v, i + 1))
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    comps.sort(key=lambda c: c[0])
    return comps, len(comps) == 1 and n > 0


def is_strongly_connected(D: Digraph) -> bool:
    return strong_components(D)[1]


def directed_distance(D: Digraph, u: int, v: int) -> int | None:
    """Length of a shortest directed u->v path, or None when unreachable."""
    if u == v:
        return 0
    dist = [-1] * D.n
    dist[u] = 0
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for w in D.out_adj[x]:
            if dist[w] < 0:
                dist[w] = dist[x] + 1
                if w == v:
                    return dist[w]
                queue.append(w)
    return None


@dataclass(frozen=True)
class StructureProfile:
    sources: tuple[int, ...]
    sinks: tuple[int, ...]
    min_out_degree: int
    max_out_degree: int
    min_in_degree: int
    max_in_degree: int
    underlying_diameter: float
    underlying_girth: float
    is_oriented: bool
    is_strong: bool


def structure_profile(D: Digraph) -> StructureProfile:
    if D.n == 0:
        raise ValueError("profile of the empty digraph is undefined")
    G = D.underlying()
    outs = [D.out_deg(v) for v in range(D.n)]
    ins = [D.in_deg(v) for v in range(D.n)]
    return StructureProfile(
        sources=tuple(D.sources()),
        sinks=tuple(D.sinks()),
        min_out_degree=min(outs),
        max_out_degree=max(outs),
        min_in_degree=min(ins),
        max_in_degree=max(ins),
        underlying_diameter=G.diameter(),
        underlying_girth=G.girth(),
        is_oriented=D.is_oriented,
        is_strong=is_strongly_connected(D),
    )


def contract(D: Digraph, blocks: Sequence[Sequence[int]], simplify: bool = True) -> Digraph:
    """Quotient of D by a partition of its vertices; block i becomes vertex i.

    With ``simplify`` (default) loops produced by intra-block arcs are dropped;
    otherwise a loop-producing partition is an error, since the data model has
    no loops.  Parallel arcs collapse by set semantics either way.
    """
    assign = [-1] * D.n
    for b, block in enumerate(blocks):
        for v in block:
            if not (0 <= v < D.n):
                raise ValueError(f"block member {v} out of range")
            if assign[v] >= 0:
                raise ValueError(f"vertex {v} appears in two blocks")
            assign[v] = b
    missing = [v for v in range(D.n) if assign[v] < 0]
    if missing:
        raise ValueError(f"blocks do not cover vertices {missing}")
    arcs = set()
    for u, v in D.arcs:
        bu, bv = assign[u], assign[v]
        if bu == bv:
            if not simplify:
                raise ValueError(f"arc ({u}, {v}) contracts to a loop on block {bu}")
            continue
        arcs.add((bu, bv))
    return Digraph(len(blocks), arcs)


def enumerate_orientations(G: Graph,
                           predicate: Callable[[Digraph], bool] | None = None
                           ) -> Iterator[Digraph]:
    """All 2^m orientations of G in a fixed edge-bitmask order.

    Bit i of the mask flips edge i of ``G.edges``; deterministic, so parallel
    consumers can partition the mask range.
    """
    if G.m > MAX_ORIENTATION_EDGES:
        raise ValueError(f"{G.m} edges exceed the enumeration cap"
                         f" of {MAX_ORIENTATION_EDGES}")
    edges = G.edges
    for mask in range(1 << G.m):
        arcs = [(v, u) if mask >> i & 1 else (u, v) for i, (u, v) in enumerate(edges)]
        D = Digraph(G.n, arcs)
        if predicate is None or predicate(D):
            yield D


def orientation_from_mask(G: Graph, mask: int) -> Digraph:
    """The single orientation of G selected by an edge bitmask."""
    arcs = [(v, u) if mask >> i & 1 else (u, v) for i, (u, v) in enumerate(G.edges)]
    return Digraph(G.n, arcs)
