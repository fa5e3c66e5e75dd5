"""Optimal-play traces and their pathologies.

A trace records the state at the end of each round (round 0 is placement).
When a cop move captures, the round ends there and the final step keeps the
robber's last vertex.  Pathology analysis enumerates *all* optimal traces
from all optimal initial states, so both "some optimal play does X" and
"every optimal play does X" are decidable.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .digraph import Digraph
from .solver import GameSpec, GameTable, ResourceLimitError, solve_game


@dataclass(frozen=True)
class TraceStep:
    round: int
    cops: tuple[int, ...]
    robber: int


@dataclass
class PlayTrace:
    steps: list[TraceStep]

    @property
    def rounds(self) -> int:
        return self.steps[-1].round

    @property
    def captured(self) -> bool:
        last = self.steps[-1]
        return last.robber in last.cops

    def to_json_obj(self) -> list[dict]:
        return [{"round": s.round, "cops": list(s.cops), "robber": s.robber}
                for s in self.steps]


def _round_successors(table: GameTable, cops: tuple[int, ...], robber: int):
    """All optimal (next_cops, next_robber, done) outcomes of one round."""
    out = []
    for c2 in table.optimal_cop_moves(cops, robber):
        if robber in c2:
            out.append((c2, robber, True))
            continue
        for r2 in table.optimal_robber_moves(c2, robber):
            out.append((c2, r2, r2 in c2))
    return out


def extract_trace(table: GameTable, cops: tuple[int, ...] | None = None,
                  robber: int | None = None) -> PlayTrace:
    """One optimal trace; ties broken by lexicographically smallest successor."""
    if cops is None:
        placements = table.optimal_placements()
        if not placements:
            raise ValueError("robber wins; no capture trace exists")
        cops = min(placements)
    cops = tuple(sorted(cops))
    if robber is None:
        robber = min(table.robber_best_starts(cops))
    if table.value(cops, robber) is None:
        raise ValueError(f"state ({cops}, {robber}) is a robber win")
    steps = [TraceStep(0, cops, robber)]
    rnd = 0
    while robber not in cops:
        rnd += 1
        cops, robber, done = min(_round_successors(table, cops, robber))
        steps.append(TraceStep(rnd, cops, robber))
        if done:
            break
    return PlayTrace(steps)


def enumerate_optimal_traces(table: GameTable, limit: int = 200_000
                             ) -> list[PlayTrace]:
    """Every optimal trace from every optimal initial state.

    Raises ResourceLimitError beyond ``limit`` traces, since a truncated
    enumeration cannot settle for-all questions.
    """
    placements = table.optimal_placements()
    if not placements:
        raise ValueError("robber wins; no capture trace exists")
    traces: list[PlayTrace] = []

    def grow(prefix: list[TraceStep], cops: tuple[int, ...], robber: int) -> None:
        if robber in cops:
            traces.append(PlayTrace(list(prefix)))
            if len(traces) > limit:
                raise ResourceLimitError(
                    f"more than {limit} optimal traces")
            return
        rnd = prefix[-1].round + 1
        for c2, r2, _ in _round_successors(table, cops, robber):
            step = TraceStep(rnd, c2, r2)
            prefix.append(step)
            grow(prefix, c2, r2)
            prefix.pop()

    for placement in sorted(placements):
        for start in table.robber_best_starts(placement):
            if start in placement:
                traces.append(PlayTrace([TraceStep(0, placement, start)]))
                continue
            grow([TraceStep(0, placement, start)], placement, start)
    return traces


def _distance_matrix(D: Digraph) -> list[list[float]]:
    inf = float("inf")
    dist = [[inf] * D.n for _ in range(D.n)]
    for s in range(D.n):
        row = dist[s]
        row[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in D.out_adj[u]:
                if row[w] == inf:
                    row[w] = row[u] + 1
                    queue.append(w)
    return dist


def trace_distances(D: Digraph, trace: PlayTrace,
                    dist: list[list[float]] | None = None) -> list[float]:
    """Per-round distance from the cop side to the robber: the smallest
    directed cop-to-robber distance at each round boundary."""
    if dist is None:
        dist = _distance_matrix(D)
    return [min(dist[c][s.robber] for c in s.cops) for s in trace.steps]


def _has_distance_increase(seq: list[float]) -> bool:
    return any(b > a for a, b in zip(seq, seq[1:]))


def _has_revisit(trace: PlayTrace) -> bool:
    """True when some vertex is cop-occupied, fully vacated, then reoccupied.

    Occupation is team-level: with several cops, a vertex handed from one cop
    to another without a gap does not count as a revisit.
    """
    seen: set[int] = set()
    vacated: set[int] = set()
    for step in trace.steps:
        here = set(step.cops)
        if here & vacated:
            return True
        vacated |= seen - here
        seen |= here
    return False


@dataclass
class TraceAnalysis:
    capture_time: int
    trace_count: int
    distance_increase_exists: bool
    distance_increase_forall: bool
    revisit_exists: bool
    revisit_forall: bool
    distance_witness: PlayTrace | None = None
    distance_witness_seq: list[float] = field(default_factory=list)
    revisit_witness: PlayTrace | None = None

    def to_json_obj(self) -> dict:
        obj = {
            "capture_time": self.capture_time,
            "trace_count": self.trace_count,
            "distance_increase": {"exists": self.distance_increase_exists,
                                  "forall": self.distance_increase_forall},
            "revisit": {"exists": self.revisit_exists,
                        "forall": self.revisit_forall},
        }
        if self.distance_witness is not None:
            obj["distance_witness"] = self.distance_witness.to_json_obj()
            obj["distance_witness_seq"] = [
                None if d == float("inf") else int(d)
                for d in self.distance_witness_seq]
        if self.revisit_witness is not None:
            obj["revisit_witness"] = self.revisit_witness.to_json_obj()
        return obj


def optimal_trace_analysis(D: Digraph, k: int, variant: str = "standard",
                           limit: int = 200_000) -> TraceAnalysis:
    """Solve with k cops and scan every optimal trace for pathologies."""
    table = solve_game(D, GameSpec(k, variant))
    ct = table.capture_time()
    if ct is None:
        raise ValueError(f"robber wins against {k} cops; no traces to analyse")
    traces = enumerate_optimal_traces(table, limit)
    dist = _distance_matrix(D)
    inc_w = None
    inc_seq: list[float] = []
    rev_w = None
    inc_all = True
    rev_all = True
    for tr in traces:
        assert tr.rounds == table.value(tr.steps[0].cops, tr.steps[0].robber)
        seq = trace_distances(D, tr, dist)
        if _has_distance_increase(seq):
            if inc_w is None:
                inc_w, inc_seq = tr, seq
        else:
            inc_all = False
        if _has_revisit(tr):
            if rev_w is None:
                rev_w = tr
        else:
            rev_all = False
    return TraceAnalysis(
        capture_time=ct, trace_count=len(traces),
        distance_increase_exists=inc_w is not None,
        distance_increase_forall=inc_all,
        revisit_exists=rev_w is not None, revisit_forall=rev_all,
        distance_witness=inc_w, distance_witness_seq=inc_seq,
        revisit_witness=rev_w)
