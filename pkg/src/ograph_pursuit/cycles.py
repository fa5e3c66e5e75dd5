"""Enumeration of simple directed cycles (Johnson-style backtracking)."""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import Digraph, strong_components


@dataclass
class CycleSearchResult:
    """Cycles as vertex tuples starting at their smallest vertex.

    ``truncated`` is set when the cap stopped the search early, in which case
    ``cycles`` is a prefix of the full enumeration.
    """
    cycles: list[tuple[int, ...]]
    truncated: bool

    def __len__(self) -> int:
        return len(self.cycles)


class _CapReached(Exception):
    pass


def simple_directed_cycles(D: Digraph, max_len: int | None = None,
                           cap: int = 100_000) -> CycleSearchResult:
    """All simple directed cycles of D, at most ``cap`` of them.

    ``max_len`` filters emitted cycles by length without affecting
    completeness of the shorter ones.
    """
    result: list[tuple[int, ...]] = []
    truncated = False

    def circuits_from(s: int, adj: dict[int, list[int]]) -> None:
        blocked: dict[int, bool] = {v: False for v in adj}
        blist: dict[int, set[int]] = {v: set() for v in adj}
        path: list[int] = []

        def unblock(v: int) -> None:
            blocked[v] = False
            while blist[v]:
                w = blist[v].pop()
                if blocked[w]:
                    unblock(w)

        def circuit(v: int) -> bool:
            found = False
            path.append(v)
            blocked[v] = True
            for w in adj[v]:
                if w == s:
                    if max_len is None or len(path) <= max_len:
                        result.append(tuple(path))
                        if len(result) >= cap:
                            raise _CapReached
                    found = True
                elif not blocked[w]:
                    if circuit(w):
                        found = True
            if found:
                unblock(v)
            else:
                for w in adj[v]:
                    blist[w].add(v)
            path.pop()
            return found

        circuit(s)

    try:
        for s in range(D.n):
            # Restrict to the strong component of s among vertices >= s; every
            # cycle is found exactly once, anchored at its smallest vertex.
            keep = [v for v in range(s, D.n)]
            sub_arcs = [(u, v) for u, v in D.arcs if u >= s and v >= s]
            sub = Digraph(D.n, sub_arcs)
            comps, _ = strong_components(sub)
            comp = next((c for c in comps if s in c), None)
            if comp is None or len(comp) == 1:
                continue
            members = set(comp)
            adj = {v: [w for w in sub.out_adj[v] if w in members] for v in comp}
            circuits_from(s, adj)
    except _CapReached:
        truncated = True
    return CycleSearchResult(result, truncated)
