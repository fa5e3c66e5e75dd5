"""Constructors for the named digraph families and orientation schemes.

Randomized constructions take an integer seed and are deterministic given
(params, seed).  Constructions carrying a certificate for the bounds module
(BFS levels and the root) attach it under ``Digraph.meta``.
"""

from __future__ import annotations

import itertools
import random

from .digraph import Digraph, Graph, is_strongly_connected

__all__ = [
    "directed_cycle", "directed_path", "out_star", "in_star",
    "transitive_tournament", "random_tournament", "random_connected_graph",
    "random_strong_ograph", "petersen_underlying",
    "ring_digraph", "fig1_counterexample", "fig2_distance", "fig3_revisit",
    "copwin_orientation", "alternating_bfs_orientation",
    "independent_set_source_orientation", "projective_incidence_orientation",
    "four_block_projective", "sts_tournament", "random_outerplanar_strong",
    "basic_family",
]


# ---------------------------------------------------------------------------
# basic families

def directed_cycle(n: int) -> Digraph:
    if n < 3:
        raise ValueError("directed cycle needs n >= 3")
    return Digraph(n, [(i, (i + 1) % n) for i in range(n)])


def directed_path(n: int) -> Digraph:
    if n < 1:
        raise ValueError("directed path needs n >= 1")
    return Digraph(n, [(i, i + 1) for i in range(n - 1)])


def out_star(n: int) -> Digraph:
    """Star with all arcs oriented from the center (vertex 0) to the leaves."""
    if n < 1:
        raise ValueError("star needs n >= 1")
    return Digraph(n, [(0, i) for i in range(1, n)])


def in_star(n: int) -> Digraph:
    if n < 1:
        raise ValueError("star needs n >= 1")
    return Digraph(n, [(i, 0) for i in range(1, n)])


def transitive_tournament(n: int) -> Digraph:
    if n < 1:
        raise ValueError("tournament needs n >= 1")
    return Digraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def random_tournament(n: int, seed: int = 0) -> Digraph:
    if n < 1:
        raise ValueError("tournament needs n >= 1")
    rng = random.Random(seed)
    arcs = [(u, v) if rng.random() < 0.5 else (v, u)
            for u, v in itertools.combinations(range(n), 2)]
    return Digraph(n, arcs)


def random_connected_graph(n: int, extra_edges: int = 0, seed: int = 0) -> Graph:
    """Random tree by uniform attachment plus ``extra_edges`` random edges."""
    if n < 1:
        raise ValueError("graph needs n >= 1")
    rng = random.Random(seed)
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    candidates = [(u, v) for u, v in itertools.combinations(range(n), 2)
                  if (u, v) not in edges]
    rng.shuffle(candidates)
    edges.update(candidates[:extra_edges])
    return Graph(n, sorted(edges))


def random_strong_ograph(n: int, extra_arcs: int = 0, seed: int = 0) -> Digraph:
    """Random strongly connected ograph: a directed Hamiltonian cycle on a
    shuffled vertex order plus ``extra_arcs`` random chords (no digons)."""
    if n < 3:
        raise ValueError("strong ograph needs n >= 3")
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    arcs = {(order[i], order[(i + 1) % n]) for i in range(n)}
    candidates = [(u, v) for u in range(n) for v in range(n) if u != v
                  and (u, v) not in arcs and (v, u) not in arcs]
    rng.shuffle(candidates)
    for u, v in candidates:
        if len(arcs) >= n + extra_arcs:
            break
        if (v, u) not in arcs:
            arcs.add((u, v))
    return Digraph(n, sorted(arcs))


def petersen_underlying() -> Graph:
    """The Petersen graph: outer 5-cycle 0..4, spokes, inner 5-cycle 5..9."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, edges)


_BASIC = {
    "cycle": directed_cycle,
    "path": directed_path,
    "out-star": out_star,
    "in-star": in_star,
    "transitive-tournament": transitive_tournament,
}


def basic_family(family_id: str, n: int | None = None, seed: int = 0):
    """Dispatch by family id; see the CLI for the full id list."""
    if family_id == "petersen":
        return petersen_underlying()
    if family_id == "random-tournament":
        return random_tournament(n, seed)
    if family_id in _BASIC:
        return _BASIC[family_id](n)
    raise ValueError(f"unknown basic family {family_id!r}")


# ---------------------------------------------------------------------------
# ring digraph

def ring_digraph(k: int) -> Digraph:
    """Cop-win digraph on 2k+1 vertices with quadratic capture time.

    Outer directed k-cycle o1..ok and inner directed (k-1)-cycle x1..x(k-1);
    each inner xj covers outer oj, and x1 additionally covers ok, so the two
    outer vertices it threatens are consecutive.  An internal vertex C feeds
    the whole inner ring and an external vertex R hangs off x2 with its only
    escape onto o1.  A single cop starting on C wins in (k-1)^2 + 1 rounds.
    """
    if k < 3:
        raise ValueError("ring digraph needs k >= 3")
    outer = list(range(k))
    inner = list(range(k, 2 * k - 1))
    c = 2 * k - 1
    r = 2 * k
    arcs = [(outer[t], outer[(t + 1) % k]) for t in range(k)]
    arcs += [(inner[j], inner[(j + 1) % (k - 1)]) for j in range(k - 1)]
    arcs += [(inner[j], outer[j]) for j in range(k - 1)]
    arcs += [(inner[0], outer[k - 1])]
    arcs += [(c, x) for x in inner]
    arcs += [(inner[1], r), (r, outer[0])]
    labels = [f"o{t + 1}" for t in range(k)] + [f"x{j + 1}" for j in range(k - 1)]
    labels += ["C", "R"]
    return Digraph(2 * k + 1, arcs, labels=labels)


# ---------------------------------------------------------------------------
# figure graphs

_FIG1_NAMES = "abcdefghijkl"
_FIG1_ARCS = [
    ("a", "b"), ("a", "g"), ("a", "c"), ("a", "d"), ("a", "e"), ("a", "f"),
    ("b", "g"), ("g", "e"), ("e", "f"), ("f", "d"), ("d", "c"), ("c", "b"),
    ("g", "c"), ("d", "e"),
    ("g", "h"), ("b", "i"), ("e", "i"), ("e", "j"),
    ("f", "k"), ("c", "j"), ("c", "k"), ("d", "l"),
    ("h", "j"), ("l", "j"), ("j", "i"), ("i", "h"), ("j", "k"), ("k", "l"),
]


def fig1_counterexample() -> Digraph:
    """12-vertex single-source ograph whose five directed cycles are all
    cop-dominated yet whose cop number is 2."""
    pos = {ch: i for i, ch in enumerate(_FIG1_NAMES)}
    arcs = [(pos[u], pos[v]) for u, v in _FIG1_ARCS]
    return Digraph(12, arcs, labels=list(_FIG1_NAMES))


def _fig_base(n: int, extra_escape: bool) -> Digraph:
    if n < 13:
        raise ValueError("figure family needs n >= 13")
    # vertex layout: a=0, v1..v12 = 1..12, w1..wn, u1..un
    a = 0
    v = lambda i: i                  # v_i, 1-based
    w = lambda i: 12 + i             # w_i, 1-based
    u = lambda i: 12 + n + i         # u_i, 1-based
    arcs = [(a, v(i)) for i in range(1, 13)]
    arcs += [(v(i), v(i % 12 + 1)) for i in range(1, 13)]
    arcs += [(w(i), w(i + 1)) for i in range(1, n)]
    arcs += [(u(i + 1), u(i)) for i in range(1, n)]
    arcs += [(u(1), w(1)), (w(n), u(n))]
    arcs += [(v(1), w(i)) for i in range(1, n + 1)]
    arcs += [(v(7), u(i)) for i in range(1, n + 1)]
    if extra_escape:
        arcs += [(u(n - 5), w(1))]
    labels = (["a"] + [f"v{i}" for i in range(1, 13)]
              + [f"w{i}" for i in range(1, n + 1)]
              + [f"u{i}" for i in range(1, n + 1)])
    return Digraph(13 + 2 * n, arcs, labels=labels)


def fig2_distance(n: int) -> Digraph:
    """Cop-win ograph where optimal play forces the cop-robber distance to
    increase between consecutive rounds (from 2 up to 6)."""
    return _fig_base(n, extra_escape=False)


def fig3_revisit(n: int) -> Digraph:
    """fig2 plus the escape arc u_{n-5} -> w_1, which forces the optimal cop
    to come back to v1 after having left it."""
    return _fig_base(n, extra_escape=True)


# ---------------------------------------------------------------------------
# orientation schemes

def _bfs_levels_connected(G: Graph, root: int) -> list[int]:
    if not 0 <= root < G.n:
        raise ValueError(f"root {root} out of range")
    levels = G.bfs_levels(root)
    if min(levels) < 0:
        raise ValueError("graph must be connected")
    return levels


def copwin_orientation(G: Graph, root: int = 0) -> Digraph:
    """Acyclic orientation with unique source ``root``: BFS layering with all
    edges directed away from the root, intra-level ties by vertex order."""
    levels = _bfs_levels_connected(G, root)
    arcs = []
    for x, y in G.edges:
        if levels[x] == levels[y]:
            arcs.append((min(x, y), max(x, y)))
        elif levels[x] < levels[y]:
            arcs.append((x, y))
        else:
            arcs.append((y, x))
    return Digraph(G.n, arcs, meta={"bfs_root": root})


def alternating_bfs_orientation(G: Graph, root: int = 0,
                                recursive: bool = False) -> Digraph:
    """Orientation whose inter-level edges all point into odd BFS levels.

    Every even-level vertex keeps only outgoing inter-level arcs, so each
    nonempty even level contributes sources the cops must cover.  With
    ``recursive`` each level-induced component is oriented the same way
    (rooted at its smallest vertex); otherwise intra-level edges follow
    vertex order.  The level structure is attached as ``meta`` so the bounds
    module can certify the layered lower bounds.
    """
    levels = _bfs_levels_connected(G, root)
    arcs: list[tuple[int, int]] = []
    for x, y in G.edges:
        if levels[x] == levels[y]:
            continue
        lo, hi = (x, y) if levels[x] < levels[y] else (y, x)
        # head must land in the odd level of the pair
        arcs.append((lo, hi) if levels[hi] % 2 == 1 else (hi, lo))
    intra = [(x, y) for x, y in G.edges if levels[x] == levels[y]]
    if not recursive:
        arcs += [(min(x, y), max(x, y)) for x, y in intra]
    else:
        by_level: dict[int, list[tuple[int, int]]] = {}
        for x, y in intra:
            by_level.setdefault(levels[x], []).append((x, y))
        for level_edges in by_level.values():
            verts = sorted({v for e in level_edges for v in e})
            pos = {v: i for i, v in enumerate(verts)}
            sub = Graph(len(verts), [(pos[x], pos[y]) for x, y in level_edges])
            for comp in sub.connected_components():
                comp_graph, back = sub.induced_subgraph(comp)
                sub_oriented = alternating_bfs_orientation(
                    comp_graph, 0, recursive=True)
                arcs += [(verts[back[p]], verts[back[q]])
                         for p, q in sub_oriented.arcs]
        # isolated intra-level vertices need no handling: no edges
    return Digraph(G.n, arcs,
                   meta={"alternating_bfs": {"root": root, "levels": levels,
                                             "recursive": recursive}})


def independent_set_source_orientation(G: Graph, X) -> Digraph:
    """Orient all edges at X away from X, making every member a source."""
    X = set(X)
    for v in X:
        if not 0 <= v < G.n:
            raise ValueError(f"vertex {v} out of range")
    arcs = []
    for u, v in G.edges:
        if u in X and v in X:
            raise ValueError(f"X is not independent: edge ({u}, {v})")
        if v in X:
            arcs.append((v, u))
        else:
            arcs.append((u, v))
    return Digraph(G.n, arcs)


# ---------------------------------------------------------------------------
# projective plane incidence orientation

def _gf_tables(q: int):
    if q in (2, 3):
        add = [[(a + b) % q for b in range(q)] for a in range(q)]
        mul = [[(a * b) % q for b in range(q)] for a in range(q)]
    elif q == 4:
        # GF(4) as {0, 1, w, w+1} encoded 0..3; addition is XOR
        add = [[a ^ b for b in range(4)] for a in range(4)]
        mul = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]]
    else:
        raise ValueError(f"unsupported plane order {q}")
    return add, mul


def _projective_points(q: int) -> list[tuple[int, int, int]]:
    """Canonical homogeneous coordinate representatives of PG(2, q)."""
    pts = [(1, a, b) for a in range(q) for b in range(q)]
    pts += [(0, 1, a) for a in range(q)]
    pts += [(0, 0, 1)]
    return pts


def projective_plane_incidence(q: int) -> tuple[Graph, int]:
    """Point-line incidence graph of PG(2, q); points first, then lines.

    Returns the graph and the number of points per side (q^2 + q + 1).
    """
    add, mul = _gf_tables(q)
    pts = _projective_points(q)
    N = len(pts)
    assert N == q * q + q + 1

    def dot(x, y):
        s = 0
        for a, b in zip(x, y):
            s = add[s][mul[a][b]]
        return s

    edges = [(i, N + j) for i in range(N) for j in range(N)
             if dot(pts[i], pts[j]) == 0]
    G = Graph(2 * N, edges)
    assert all(G.degree(v) == q + 1 for v in range(2 * N))
    return G, N


def _hamiltonian_cycle(G: Graph, tries: int = 64) -> list[int] | None:
    """Backtracking Hamiltonian cycle search with rotating start preference."""
    n = G.n
    for attempt in range(tries):
        order = {v: (v + attempt) % n for v in range(n)}
        path = [0]
        used = [False] * n
        used[0] = True
        budget = [200_000]

        def extend() -> bool:
            if budget[0] <= 0:
                return False
            budget[0] -= 1
            v = path[-1]
            if len(path) == n:
                return 0 in G.adj[v]
            for w in sorted(G.adj[v], key=lambda x: order[x]):
                if used[w]:
                    continue
                used[w] = True
                path.append(w)
                if extend():
                    return True
                path.pop()
                used[w] = False
            return False

        if extend():
            return path
    return None


def _perfect_matching(left: list[int], right: list[int],
                      adj: dict[int, list[int]]) -> dict[int, int] | None:
    """Kuhn's augmenting-path matching; returns left->right or None."""
    match_r: dict[int, int] = {}

    def augment(u: int, seen: set[int]) -> bool:
        for w in adj[u]:
            if w in seen:
                continue
            seen.add(w)
            if w not in match_r or augment(match_r[w], seen):
                match_r[w] = u
                return True
        return False

    for u in left:
        if not augment(u, set()):
            return None
    return {u: w for w, u in match_r.items()}


def projective_incidence_orientation(q: int) -> Digraph:
    """Strong orientation of the PG(2, q) incidence graph with girth 6 and
    minimum out-degree floor((q+1)/2): a cyclically oriented Hamiltonian
    cycle plus the leftover (q-1)-regular bipartite graph split into perfect
    matchings, ceil((q-1)/2) of them oriented points-to-lines."""
    if q not in (2, 3, 4):
        raise ValueError("supported plane orders are 2, 3 and 4")
    G, N = projective_plane_incidence(q)
    cycle = _hamiltonian_cycle(G)
    if cycle is None:
        raise RuntimeError("no Hamiltonian cycle found within budget")
    arcs = [(cycle[i], cycle[(i + 1) % G.n]) for i in range(G.n)]
    cycle_edges = {(min(a, b), max(a, b)) for a, b in arcs}
    rest = {v: [w for w in G.adj[v] if (min(v, w), max(v, w)) not in cycle_edges]
            for v in range(G.n)}
    points = list(range(N))
    lines = list(range(N, 2 * N))
    to_lines = (q - 1 + 1) // 2       # ceil((q-1)/2) matchings points->lines
    for t in range(q - 1):
        matching = _perfect_matching(points, lines, rest)
        assert matching is not None, "regular bipartite graph must match"
        for p, ln in matching.items():
            arcs.append((p, ln) if t < to_lines else (ln, p))
            rest[p].remove(ln)
            rest[ln].remove(p)
    labels = [f"P{i}" for i in range(N)] + [f"L{i}" for i in range(N)]
    D = Digraph(G.n, arcs, labels=labels)
    assert all(D.out_deg(v) + D.in_deg(v) == q + 1 for v in range(G.n))
    return D


def four_block_projective(q: int) -> Digraph:
    """Strong ograph on 4(q^2+q+1) vertices with cop number >= min-out-degree
    (girth 6) whose coreset contraction is a directed 4-cycle.

    Four blocks A1, A2, B1, B2; each (A_i, B_j) pair spans a copy of the
    PG(2, q) incidence graph with A_i as points and B_j as lines.  Incidence
    edges run A_i -> B_i and B_{i+1} -> A_i (block indices mod 2), so the
    blocks themselves form the directed cycle A1 -> B1 -> A2 -> B2 -> A1.
    """
    from .digraph import is_strongly_connected as _strong
    G, N = projective_plane_incidence(q)
    incidence = [(p, l - N) for p, l in G.edges]
    a1 = lambda p: p
    a2 = lambda p: N + p
    b1 = lambda l: 2 * N + l
    b2 = lambda l: 3 * N + l
    arcs = []
    for p, l in incidence:
        arcs += [(a1(p), b1(l)), (a2(p), b2(l))]   # A_i -> B_i
        arcs += [(b2(l), a1(p)), (b1(l), a2(p))]   # B_{i+1} -> A_i
    labels = ([f"A1_{p}" for p in range(N)] + [f"A2_{p}" for p in range(N)]
              + [f"B1_{l}" for l in range(N)] + [f"B2_{l}" for l in range(N)])
    D = Digraph(4 * N, arcs, labels=labels,
                meta={"blocks": {"A1": list(range(N)),
                                 "A2": list(range(N, 2 * N)),
                                 "B1": list(range(2 * N, 3 * N)),
                                 "B2": list(range(3 * N, 4 * N))}})
    assert D.is_oriented and _strong(D)
    assert all(D.out_deg(v) == q + 1 and D.in_deg(v) == q + 1
               for v in range(D.n))
    return D


# ---------------------------------------------------------------------------
# Steiner triple tournaments

def steiner_triples(n: int) -> list[tuple[int, int, int]]:
    """STS(n) by the Bose construction over Z_m x {0,1,2}, m = n/3 odd."""
    if n < 9 or n % 6 != 3:
        raise ValueError("Bose construction needs n ≡ 3 (mod 6), n >= 9")
    m = n // 3
    half = (m + 1) // 2               # multiplicative inverse of 2 in Z_m

    def vid(i: int, c: int) -> int:
        return c * m + i

    triples = [(vid(i, 0), vid(i, 1), vid(i, 2)) for i in range(m)]
    for c in range(3):
        for i in range(m):
            for j in range(i + 1, m):
                h = ((i + j) * half) % m
                triples.append((vid(i, c), vid(j, c), vid(h, (c + 1) % 3)))
    return triples


def sts_tournament(n: int, seed: int = 0) -> Digraph:
    """Tournament from STS(n) with every triple cyclically oriented, the
    direction of each 3-cycle drawn from the seeded RNG."""
    triples = steiner_triples(n)
    rng = random.Random(seed)
    arcs = []
    for a, b, c in triples:
        if rng.random() < 0.5:
            arcs += [(a, b), (b, c), (c, a)]
        else:
            arcs += [(a, c), (c, b), (b, a)]
    D = Digraph(n, arcs)
    assert D.m == n * (n - 1) // 2, "triples must cover every pair once"
    return D


# ---------------------------------------------------------------------------
# random strong outerplanar ographs

def random_outerplanar_strong(n: int, seed: int = 0) -> Digraph:
    """Random strongly connected outerplanar ograph on n vertices.

    Built as a tree of consistently directed cycle blocks glued at a shared
    vertex or a shared arc (each glue arc used at most once, keeping the
    graph outerplanar), plus random non-crossing chords inside blocks.
    Strong connectivity holds by construction and is asserted.
    """
    if n < 3:
        raise ValueError("outerplanar family needs n >= 3")
    rng = random.Random(seed)
    arcs: list[tuple[int, int]] = []
    arcset: set[tuple[int, int]] = set()
    glue_arcs: list[tuple[int, int]] = []
    next_vertex = 0

    def add_arc(u: int, v: int) -> None:
        arcs.append((u, v))
        arcset.add((u, v))

    def add_chords(order: list[int]) -> None:
        # random non-crossing chords: recursive splits of the cycle order
        def rec(i: int, j: int) -> None:
            if j - i < 2:
                return
            k = rng.randint(i + 1, j - 1)
            a, b = order[i], order[k]
            gap = (k - i) > 1 and (i != 0 or k != len(order) - 1)
            if gap and rng.random() < 0.5:
                if (a, b) not in arcset and (b, a) not in arcset:
                    if rng.random() < 0.5:
                        a, b = b, a
                    add_arc(a, b)
            rec(i, k)
            rec(k, j)
        rec(0, len(order) - 1)

    def new_block(cycle: list[int]) -> None:
        for i in range(len(cycle)):
            add_arc(cycle[i], cycle[(i + 1) % len(cycle)])
        for i in range(len(cycle)):
            glue_arcs.append((cycle[i], cycle[(i + 1) % len(cycle)]))
        add_chords(cycle)

    size = rng.randint(3, min(n, 7))
    first = list(range(size))
    next_vertex = size
    new_block(first)
    vertices = list(first)

    while next_vertex < n:
        remaining = n - next_vertex
        use_arc = glue_arcs and (remaining == 1 or rng.random() < 0.5)
        if use_arc:
            # new cycle u -> w -> fresh path -> u over an existing arc (u, w)
            u, w = glue_arcs.pop(rng.randrange(len(glue_arcs)))
            grow = rng.randint(1, min(remaining, 5))
            fresh = list(range(next_vertex, next_vertex + grow))
            next_vertex += grow
            cycle = [u, w] + fresh
            prev = w
            for x in fresh:
                add_arc(prev, x)
                prev = x
            add_arc(prev, u)
            for i in range(1, len(cycle)):
                glue_arcs.append((cycle[i], cycle[(i + 1) % len(cycle)]))
            add_chords(cycle)
        else:
            v0 = rng.choice(vertices)
            grow = rng.randint(2, max(2, min(remaining, 6)))
            if grow > remaining:
                grow = remaining
            if grow < 2:
                continue
            fresh = list(range(next_vertex, next_vertex + grow))
            next_vertex += grow
            cycle = [v0] + fresh
            new_block(cycle)
        vertices = list(range(next_vertex))

    D = Digraph(n, arcs)
    assert D.is_oriented and is_strongly_connected(D)
    return D
