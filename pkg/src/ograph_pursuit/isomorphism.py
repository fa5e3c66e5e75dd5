"""Canonical forms and isomorphism testing for small digraphs.

Color refinement on (out, in) degree signatures narrows the search; a
backtracking pass then picks the lexicographically smallest relabeled arc
set among color-respecting permutations.  Intended for n <= 16.
"""

from __future__ import annotations

from .digraph import Digraph

MAX_VERTICES = 16


def refine_colors(D: Digraph) -> tuple[int, ...]:
    """Stable vertex coloring invariant under isomorphism (small ints)."""
    colors = [(D.out_deg(v), D.in_deg(v)) for v in range(D.n)]
    while True:
        sigs = [
            (colors[v],
             tuple(sorted(colors[w] for w in D.out_adj[v])),
             tuple(sorted(colors[w] for w in D.in_adj[v])))
            for v in range(D.n)
        ]
        palette = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = [palette[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            return tuple(new)
        colors = new


def canonical_form(D: Digraph) -> tuple:
    """A hashable form equal for exactly the isomorphic digraphs.

    Returns ``(n, arcs)`` after the canonical relabeling.  Search is over
    permutations that respect the refined color classes, pruned by comparing
    partial adjacency encodings against the best complete one found.
    """
    n = D.n
    if n > MAX_VERTICES:
        raise ValueError(f"canonical form supports n <= {MAX_VERTICES}, got {n}")
    if n == 0:
        return (0, ())
    colors = refine_colors(D)
    # Position t gets a vertex of class_order[t]; class order is color value,
    # which is isomorphism-invariant by construction.
    order = sorted(range(n), key=lambda v: (colors[v], v))
    class_of_pos = [colors[v] for v in order]
    arcset = set(D.arcs)

    best_bits: list[tuple[int, ...]] | None = None
    best_perm: list[int] | None = None
    perm: list[int] = []
    used = [False] * n
    bits_stack: list[tuple[int, ...]] = []

    def place(t: int) -> None:
        nonlocal best_bits, best_perm
        if t == n:
            if best_bits is None or bits_stack < best_bits:
                best_bits = list(bits_stack)
                best_perm = list(perm)
            return
        for v in range(n):
            if used[v] or colors[v] != class_of_pos[t]:
                continue
            row = []
            for j in range(t):
                row.append(1 if (v, perm[j]) in arcset else 0)
                row.append(1 if (perm[j], v) in arcset else 0)
            bits = tuple(row)
            if best_bits is not None:
                prefix = bits_stack + [bits]
                if prefix > best_bits[: t + 1]:
                    continue
            used[v] = True
            perm.append(v)
            bits_stack.append(bits)
            place(t + 1)
            bits_stack.pop()
            perm.pop()
            used[v] = False

    place(0)
    assert best_perm is not None
    pos = {v: i for i, v in enumerate(best_perm)}
    arcs = tuple(sorted((pos[u], pos[v]) for u, v in D.arcs))
    return (n, arcs)


def find_isomorphism(D1: Digraph, D2: Digraph) -> list[int] | None:
    """A vertex map taking D1 onto D2, or None; map[v1] = v2."""
    if D1.n != D2.n or D1.m != D2.m:
        return None
    if D1.n > MAX_VERTICES:
        raise ValueError(f"isomorphism search supports n <= {MAX_VERTICES}")
    n = D1.n
    c1, c2 = refine_colors(D1), refine_colors(D2)
    if sorted(c1) != sorted(c2):
        return None
    arcs2 = set(D2.arcs)
    # Map vertices in order of rarest color first to fail fast.
    freq = {c: c1.count(c) for c in set(c1)}
    verts = sorted(range(n), key=lambda v: (freq[c1[v]], c1[v], v))
    mapping = [-1] * n
    taken = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = verts[i]
        for w in range(n):
            if taken[w] or c2[w] != c1[v]:
                continue
            ok = True
            for x in D1.out_adj[v]:
                if mapping[x] >= 0 and (w, mapping[x]) not in arcs2:
                    ok = False
                    break
            if ok:
                for x in D1.in_adj[v]:
                    if mapping[x] >= 0 and (mapping[x], w) not in arcs2:
                        ok = False
                        break
            if not ok:
                continue
            mapping[v] = w
            taken[w] = True
            if extend(i + 1):
                return True
            mapping[v] = -1
            taken[w] = False
        return False

    return mapping if extend(0) else None


def isomorphic(D1: Digraph, D2: Digraph) -> bool:
    return find_isomorphism(D1, D2) is not None
