"""Line digraphs, edge cop number, coreset partitions, contraction sequences.

A coreset (coreflexive set) is a minimal X with N-(N+(X)) = X; the coresets
of a sink-free digraph partition its vertex set, and repeatedly contracting
them drives any digraph down to one of two limit shapes: a directed path or
a directed cycle with a pendant directed path (possibly empty).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .digraph import Digraph, contract
from .solver import STANDARD, cop_number

__all__ = [
    "CoresetPartition", "ContractionError", "ContractionSequence",
    "classify_limit_shape", "contraction_sequence", "coreset_closure",
    "coreset_partition", "edge_cop_number", "line_digraph",
]

DIRECTED_PATH = "directed_path"
CYCLE_WITH_TAIL = "cycle_with_tail"


# ---------------------------------------------------------------------------
# line digraph

def line_digraph(D: Digraph) -> tuple[Digraph, list[tuple[int, int]]]:
    """Line digraph L(D) plus the list mapping L-vertex index -> arc of D.

    L(D) has one vertex per arc of D, and an arc (a,b) -> (b,d) for every
    composable pair.  Strategies on L(D) translate back to D through the
    returned arc map.
    """
    if D.m == 0:
        raise ValueError("line digraph needs at least one arc")
    arcs = list(D.arcs)
    index = {arc: i for i, arc in enumerate(arcs)}
    larcs = []
    for i, (a, b) in enumerate(arcs):
        for d in D.out_adj[b]:
            j = index[(b, d)]
            if i != j:
                larcs.append((i, j))
    labels = [f"{D.label(a)}->{D.label(b)}" for a, b in arcs]
    return Digraph(len(arcs), larcs, labels=labels), arcs


def edge_cop_number(D: Digraph, k_max: int = 4, variant: str = STANDARD,
                    budget: int | None = None) -> int | None:
    """Cop number of the game played on the arcs of D, i.e. cop(L(D))."""
    L, _ = line_digraph(D)
    if budget is None:
        return cop_number(L, k_max=k_max, variant=variant)
    return cop_number(L, k_max=k_max, variant=variant, budget=budget)


# ---------------------------------------------------------------------------
# coresets

def coreset_closure(D: Digraph, seed) -> frozenset[int]:
    """Least fixpoint of X -> N-(N+(X)) above the seed set.

    The map is expansive when every vertex has an out-arc, so iteration
    from any seed climbs to the minimal coreset containing it.
    """
    X = frozenset(seed)
    while True:
        forward: set[int] = set()
        for v in X:
            forward.update(D.out_adj[v])
        nxt = frozenset(u for w in forward for u in D.in_adj[w])
        if nxt == X:
            return X
        X = nxt


@dataclass(frozen=True)
class CoresetPartition:
    """Partition of V(D) into its coresets, in order of smallest member."""
    blocks: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.blocks)

    def block_of(self, v: int) -> int:
        for i, b in enumerate(self.blocks):
            if v in b:
                return i
        raise KeyError(v)

    def to_json_obj(self) -> dict:
        return {"blocks": [list(b) for b in self.blocks]}


def coreset_partition(D: Digraph) -> CoresetPartition:
    """Coreset partition of a sink-free digraph.

    Computes the closure of every singleton; the distinct closures are the
    blocks.  Closures that overlap without coinciding would contradict the
    partition theorem, so that case raises rather than returning nonsense.
    """
    sinks = D.sinks()
    if sinks:
        raise ValueError(f"coresets need out-degree >= 1 everywhere; "
                         f"sinks: {sinks}")
    closure_of: dict[int, frozenset[int]] = {}
    for v in range(D.n):
        if v in closure_of:
            continue
        X = coreset_closure(D, [v])
        if v not in X:
            raise RuntimeError(f"closure of {{{v}}} lost its seed: {sorted(X)}")
        for u in X:
            prev = closure_of.get(u)
            if prev is not None and prev != X:
                raise RuntimeError(
                    f"coreset closures fail to partition: {sorted(X)} vs "
                    f"{sorted(prev)} at vertex {u}")
            closure_of[u] = X
    blocks = sorted({X for X in closure_of.values()}, key=min)
    return CoresetPartition(tuple(tuple(sorted(b)) for b in blocks))


# ---------------------------------------------------------------------------
# contraction sequences

def classify_limit_shape(D: Digraph) -> str | None:
    """Classify D as a contraction limit: DIRECTED_PATH if it is a simple
    directed path (possibly a single vertex), CYCLE_WITH_TAIL if it is a
    directed cycle with a pendant directed path (possibly empty), else None.
    """
    n = D.n
    outd = [D.out_deg(v) for v in range(n)]
    ind = [D.in_deg(v) for v in range(n)]

    if D.m == n - 1 and all(o <= 1 for o in outd) and all(i <= 1 for i in ind):
        starts = [v for v in range(n) if ind[v] == 0]
        if len(starts) == 1:
            v, seen = starts[0], 1
            while outd[v] == 1:
                v = D.out_adj[v][0]
                seen += 1
            if seen == n:
                return DIRECTED_PATH

    if D.m == n and all(i == 1 for i in ind):
        if all(o == 1 for o in outd):
            # union of cycles with one in-arc each; connected iff one cycle
            v, seen = 0, set()
            while v not in seen:
                seen.add(v)
                v = D.out_adj[v][0]
            if len(seen) == n:
                return CYCLE_WITH_TAIL
        else:
            tails = [v for v in range(n) if outd[v] == 0]
            forks = [v for v in range(n) if outd[v] == 2]
            others_ok = all(o in (0, 1, 2) for o in outd)
            if len(tails) == 1 and len(forks) == 1 and others_ok:
                # walk the tail backwards from its end to the fork vertex
                v, tail = tails[0], set()
                while v != forks[0]:
                    if v in tail:
                        return None
                    tail.add(v)
                    v = D.in_adj[v][0]
                # follow the cycle arc out of the fork back around
                fork = forks[0]
                nxts = [w for w in D.out_adj[fork] if w not in tail]
                if len(nxts) != 1:
                    return None
                v, cyc = nxts[0], {fork}
                while v != fork:
                    if v in cyc or v in tail or outd[v] != 1:
                        return None
                    cyc.add(v)
                    v = D.out_adj[v][0]
                if len(cyc) + len(tail) == n:
                    return CYCLE_WITH_TAIL
    return None


class ContractionError(RuntimeError):
    """Contraction sequence failed; carries the iterates produced so far."""

    def __init__(self, message: str, iterates: list[Digraph]):
        super().__init__(message)
        self.iterates = iterates


@dataclass
class ContractionSequence:
    iterates: list[Digraph]
    partitions: list[CoresetPartition]
    limit_shape: str
    limit_cop_number: int

    @property
    def steps(self) -> int:
        return len(self.iterates) - 1

    @property
    def limit(self) -> Digraph:
        return self.iterates[-1]

    def to_json_obj(self) -> dict:
        return {
            "steps": self.steps,
            "limit_shape": self.limit_shape,
            "limit_cop_number": self.limit_cop_number,
            "iterates": [{"n": d.n, "m": d.m} for d in self.iterates],
            "partitions": [p.to_json_obj() for p in self.partitions],
        }


def contraction_sequence(D: Digraph,
                         max_steps: int | None = None) -> ContractionSequence:
    """Iterate coreset contraction until the digraph is a directed path or a
    directed cycle with a pendant path, and solve for the limit's cop number.

    Each iterate either matches a limit shape (stop) or is partitioned and
    contracted.  A sink in a non-limit iterate violates the coreset
    precondition and raises with the step index; so does running past
    ``max_steps`` (default |V(D)| + 1, enough since n strictly shrinks).
    """
    if max_steps is None:
        max_steps = D.n + 1
    iterates = [D]
    partitions: list[CoresetPartition] = []
    while True:
        cur = iterates[-1]
        shape = classify_limit_shape(cur)
        if shape is not None:
            k = cop_number(cur, k_max=2)
            assert k is not None, "limit shapes are at most 2-cop-win"
            return ContractionSequence(iterates, partitions, shape, k)
        if len(iterates) > max_steps:
            raise ContractionError(
                f"no limit shape within {max_steps} contractions", iterates)
        try:
            part = coreset_partition(cur)
        except ValueError as exc:
            raise ContractionError(
                f"step {len(iterates) - 1}: {exc}", iterates) from exc
        if len(part) == cur.n:
            raise ContractionError(
                f"step {len(iterates) - 1}: all-singleton coreset partition "
                f"on a non-limit digraph; contraction cannot progress",
                iterates)
        partitions.append(part)
        iterates.append(contract(cur, part.blocks, simplify=True))
