"""Exact k-cop pursuit games on digraphs, solved by retrograde analysis.

Rules implemented here: at round 0 the cops pick a multiset of k start
vertices, then the robber picks a start.  Every later round the cops each
move along an out-arc (or hold position in the standard variant), capturing
immediately if one lands on the robber; otherwise the robber moves the same
way.  The value of a state is the number of rounds to capture under optimal
play, with robber wins reported as None.

Variants: ``STANDARD`` allows holding; ``FULLY_ACTIVE`` forces every agent
to move each round (requires out-degree >= 1 wherever that agent may stand).
A :class:`Confinement` restricts where the robber may start and move,
optionally to pass-or-advance moves along a fixed directed cycle.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from . import _backend
from .digraph import Digraph

STANDARD = "standard"
FULLY_ACTIVE = "active"

DEFAULT_STATE_BUDGET = 50_000_000
INF32 = np.int32(1 << 28)


class ResourceLimitError(RuntimeError):
    """A solve or analysis would exceed its configured budget."""


@dataclass(frozen=True)
class Confinement:
    """Robber restriction: ``allowed`` start/move vertices, and optionally a
    directed cycle on which the robber may only hold or step forward."""
    allowed: tuple[int, ...]
    forward_cycle: tuple[int, ...] | None = None


@dataclass(frozen=True)
class GameSpec:
    k: int
    variant: str = STANDARD
    confinement: Confinement | None = None


@dataclass
class SolveSummary:
    winner: str                      # "cops" | "robber"
    k: int
    variant: str
    capture_time: int | None
    optimal_placements: list[tuple[int, ...]]
    robber_best_starts: list[int]    # responses against the first placement
    backend: str

    def to_json_obj(self) -> dict:
        return {
            "winner": self.winner,
            "k": self.k,
            "variant": self.variant,
            "capture_time": self.capture_time,
            "optimal_placements": [list(p) for p in self.optimal_placements],
            "robber_best_starts": list(self.robber_best_starts),
            "backend": self.backend,
        }


def _validate_spec(D: Digraph, spec: GameSpec) -> None:
    if D.n == 0:
        raise ValueError("cannot play on the empty digraph")
    if spec.k < 1:
        raise ValueError("at least one cop is required")
    if spec.variant not in (STANDARD, FULLY_ACTIVE):
        raise ValueError(f"unknown variant {spec.variant!r}")
    if spec.variant == FULLY_ACTIVE:
        stuck = [v for v in range(D.n) if not D.out_adj[v]]
        if stuck:
            raise ValueError(
                f"fully active play needs out-degree >= 1 everywhere; sinks {stuck}")
    conf = spec.confinement
    if conf is not None:
        if not conf.allowed:
            raise ValueError("confinement.allowed must be non-empty")
        for v in conf.allowed:
            if not 0 <= v < D.n:
                raise ValueError(f"confinement vertex {v} out of range")
        cyc = conf.forward_cycle
        if cyc is not None:
            if len(cyc) != len(set(cyc)):
                raise ValueError("forward_cycle repeats a vertex")
            if len(cyc) < 2:
                raise ValueError("forward_cycle must have length >= 2")
            for i, v in enumerate(cyc):
                w = cyc[(i + 1) % len(cyc)]
                if not D.has_arc(v, w):
                    raise ValueError(f"forward_cycle arc ({v}, {w}) missing from D")
            if not set(cyc) <= set(conf.allowed):
                raise ValueError("forward_cycle must lie inside confinement.allowed")


def _cop_move_lists(D: Digraph, variant: str) -> list[tuple[int, ...]]:
    if variant == FULLY_ACTIVE:
        return [D.out_adj[v] for v in range(D.n)]
    return [(v,) + D.out_adj[v] for v in range(D.n)]


def _robber_move_lists(D: Digraph, spec: GameSpec) -> tuple[list[tuple[int, ...]], list[int]]:
    """Per-vertex robber moves plus the list of legal robber start vertices.

    Vertices the robber can never occupy get a hold-only move list so the
    kernel stays total; those states are unreachable and never queried.
    """
    hold = spec.variant != FULLY_ACTIVE
    conf = spec.confinement
    if conf is None:
        starts = list(range(D.n))
        moves = [((v,) if hold else ()) + D.out_adj[v] for v in range(D.n)]
    else:
        allowed = sorted(set(conf.allowed))
        starts = allowed
        allowed_set = set(allowed)
        moves = [(v,) for v in range(D.n)]
        if conf.forward_cycle is not None:
            cyc = conf.forward_cycle
            nxt = {cyc[i]: cyc[(i + 1) % len(cyc)] for i in range(len(cyc))}
            for v in allowed:
                step = (nxt[v],) if v in nxt else ()
                moves[v] = ((v,) if hold else ()) + step
        else:
            for v in allowed:
                step = tuple(w for w in D.out_adj[v] if w in allowed_set)
                moves[v] = ((v,) if hold else ()) + step
    for v in starts:
        if not moves[v]:
            raise ValueError(
                f"robber has no legal move at vertex {v} under this spec")
    return moves, starts


def _moves_to_csr(moves: list[tuple[int, ...]]) -> tuple[np.ndarray, np.ndarray]:
    indptr = np.zeros(len(moves) + 1, np.int64)
    for v, opts in enumerate(moves):
        indptr[v + 1] = indptr[v] + len(opts)
    data = np.fromiter((w for opts in moves for w in opts), np.int64,
                       count=int(indptr[-1]))
    return indptr, data


def _csr_transpose(indptr: np.ndarray, data: np.ndarray, n_targets: int
                   ) -> tuple[np.ndarray, np.ndarray]:
    n_src = len(indptr) - 1
    src = np.repeat(np.arange(n_src, dtype=np.int64), np.diff(indptr))
    order = np.argsort(data, kind="stable")
    pred_data = src[order]
    counts = np.bincount(data, minlength=n_targets)
    pred_indptr = np.concatenate(([0], np.cumsum(counts))).astype(np.int64)
    return pred_indptr, pred_data


def _pair_index_table(n: int) -> np.ndarray:
    table = np.zeros((n, n), np.int64)
    idx = 0
    for u in range(n):
        for v in range(u, n):
            table[u, v] = idx
            idx += 1
    return table


def _cop_successor_csr(configs: list[tuple[int, ...]],
                       config_index: dict[tuple[int, ...], int],
                       cop_moves: list[tuple[int, ...]],
                       n: int, k: int) -> tuple[np.ndarray, np.ndarray]:
    mv_indptr, mv_data = _moves_to_csr(cop_moves)
    if k == 1:
        # configs coincide with vertices, successor configs with moves
        return mv_indptr, mv_data
    if k == 2:
        conf = np.array(configs, np.int64)
        return _backend.kernels().build_pair_successors(
            np.ascontiguousarray(conf[:, 0]), np.ascontiguousarray(conf[:, 1]),
            mv_indptr, mv_data, _pair_index_table(n), len(configs))
    indptr = np.zeros(len(configs) + 1, np.int64)
    chunks = []
    for i, cfg in enumerate(configs):
        succ = {tuple(sorted(pick)) for pick in itertools.product(
            *(cop_moves[v] for v in cfg))}
        ids = sorted(config_index[s] for s in succ)
        chunks.append(np.array(ids, np.int64))
        indptr[i + 1] = indptr[i] + len(ids)
    data = np.concatenate(chunks) if chunks else np.empty(0, np.int64)
    return indptr, data


class GameTable:
    """Solved game: optimal values and move extraction for every state."""

    def __init__(self, digraph: Digraph, spec: GameSpec,
                 configs: list[tuple[int, ...]],
                 contains: np.ndarray, vc: np.ndarray, vr: np.ndarray,
                 csucc: tuple[np.ndarray, np.ndarray],
                 robber_moves: list[tuple[int, ...]],
                 robber_starts: list[int], backend: str):
        self.digraph = digraph
        self.spec = spec
        self.configs = configs
        self.config_index = {c: i for i, c in enumerate(configs)}
        self.contains = contains
        self.vc = vc
        self.vr = vr
        self._csucc = csucc
        self.robber_moves = robber_moves
        self.robber_starts = robber_starts
        self.backend = backend

    # -- raw state values -------------------------------------------------

    def _cfg(self, cops) -> int:
        key = tuple(sorted(cops))
        try:
            return self.config_index[key]
        except KeyError:
            raise ValueError(f"not a cop configuration: {cops!r}") from None

    def value(self, cops, robber: int, to_move: str = "cops") -> int | None:
        i = self._cfg(cops)
        table = self.vc if to_move == "cops" else self.vr
        v = int(table[i, robber])
        return None if v >= INF32 else v

    def successor_configs(self, cops) -> list[tuple[int, ...]]:
        i = self._cfg(cops)
        indptr, data = self._csucc
        return [self.configs[int(j)] for j in data[indptr[i]:indptr[i + 1]]]

    # -- placement layer --------------------------------------------------

    def placement_value(self, cops) -> int | None:
        """Rounds to capture when play starts from this cop placement."""
        i = self._cfg(cops)
        worst = int(self.vc[i, self.robber_starts].max())
        return None if worst >= INF32 else worst

    def capture_time(self) -> int | None:
        worst = self.vc[:, self.robber_starts].max(axis=1)
        best = int(worst.min())
        return None if best >= INF32 else best

    def optimal_placements(self) -> list[tuple[int, ...]]:
        """Cop placements achieving capture_time; empty if the robber wins."""
        worst = self.vc[:, self.robber_starts].max(axis=1)
        best = worst.min()
        if best >= INF32:
            return []
        return [self.configs[i] for i in np.flatnonzero(worst == best)]

    def robber_best_starts(self, cops) -> list[int]:
        i = self._cfg(cops)
        row = self.vc[i, self.robber_starts]
        return [self.robber_starts[j] for j in np.flatnonzero(row == row.max())]

    # -- optimal moves ----------------------------------------------------

    def optimal_cop_moves(self, cops, robber: int) -> list[tuple[int, ...]]:
        """Successor configs that preserve the value; [] when not a cop win."""
        i = self._cfg(cops)
        v = int(self.vc[i, robber])
        if v >= INF32 or v == 0:
            return []
        out = []
        indptr, data = self._csucc
        for j in data[indptr[i]:indptr[i + 1]]:
            j = int(j)
            after = 0 if self.contains[j, robber] else int(self.vr[j, robber])
            if after == v - 1:
                out.append(self.configs[j])
        return out

    def optimal_robber_moves(self, cops, robber: int) -> list[int]:
        """Value-preserving robber moves; survival moves in robber-win states."""
        i = self._cfg(cops)
        if self.contains[i, robber]:
            return []
        w = int(self.vr[i, robber])
        out = []
        for r2 in self.robber_moves[robber]:
            after = 0 if self.contains[i, r2] else int(self.vc[i, r2])
            if (after >= INF32) if w >= INF32 else (after == w):
                out.append(r2)
        return out

    # -- reporting and auditing -------------------------------------------

    def summary(self) -> SolveSummary:
        ct = self.capture_time()
        placements = self.optimal_placements()
        responses = self.robber_best_starts(placements[0]) if placements else []
        return SolveSummary(
            winner="cops" if ct is not None else "robber",
            k=self.spec.k, variant=self.spec.variant, capture_time=ct,
            optimal_placements=placements, robber_best_starts=responses,
            backend=self.backend)

    def verify_recurrence(self) -> None:
        """Re-check the optimality equations at every state, in plain Python.

        Raises ValueError on the first violated state.  Quadratic-ish and
        meant for tests, not hot paths.
        """
        indptr, data = self._csucc
        n = self.digraph.n
        for i, cfg in enumerate(self.configs):
            members = set(cfg)
            for r in range(n):
                if r in members:
                    if self.vc[i, r] != 0 or self.vr[i, r] != 0:
                        raise ValueError(f"capture state ({cfg}, {r}) not 0")
                    continue
                best = INF32
                for j in data[indptr[i]:indptr[i + 1]]:
                    j = int(j)
                    after = 0 if self.contains[j, r] else int(self.vr[j, r])
                    best = min(best, after)
                want = INF32 if best >= INF32 else best + 1
                if int(self.vc[i, r]) != want:
                    raise ValueError(
                        f"cop value at ({cfg}, {r}): {self.vc[i, r]} != {want}")
                worst = 0
                for r2 in self.robber_moves[r]:
                    after = 0 if self.contains[i, r2] else int(self.vc[i, r2])
                    worst = max(worst, after)
                if int(self.vr[i, r]) != min(worst, INF32):
                    raise ValueError(
                        f"robber value at ({cfg}, {r}): {self.vr[i, r]} != {worst}")


def solve_game(D: Digraph, spec: GameSpec,
               state_budget: int = DEFAULT_STATE_BUDGET) -> GameTable:
    """Solve the pursuit game exactly for every state; see the module doc."""
    _validate_spec(D, spec)
    n, k = D.n, spec.k
    n_configs = math.comb(n + k - 1, k)
    if 2 * n_configs * n > state_budget:
        raise ResourceLimitError(
            f"{2 * n_configs * n} states exceed the budget of {state_budget}")
    configs = list(itertools.combinations_with_replacement(range(n), k))
    config_index = {c: i for i, c in enumerate(configs)}
    cop_moves = _cop_move_lists(D, spec.variant)
    robber_moves, robber_starts = _robber_move_lists(D, spec)

    conf_members = np.array(configs, np.int64)
    contains = np.zeros((n_configs, n), bool)
    contains[np.repeat(np.arange(n_configs), k), conf_members.ravel()] = True

    csucc_indptr, csucc_data = _cop_successor_csr(
        configs, config_index, cop_moves, n, k)
    cpred_indptr, cpred_data = _csr_transpose(csucc_indptr, csucc_data, n_configs)
    rmv_indptr, rmv_data = _moves_to_csr(robber_moves)
    rpred_indptr, rpred_data = _csr_transpose(rmv_indptr, rmv_data, n)

    vc = np.where(contains, np.int32(0), INF32).astype(np.int32)
    vr = vc.copy()
    _backend.kernels().solve_tables(
        contains, conf_members,
        csucc_indptr, csucc_data, cpred_indptr, cpred_data,
        rmv_indptr, rmv_data, rpred_indptr, rpred_data,
        vc, vr)
    return GameTable(D, spec, configs, contains, vc, vr,
                     (csucc_indptr, csucc_data), robber_moves, robber_starts,
                     _backend.backend_name())


def capture_time(D: Digraph, k: int, variant: str = STANDARD,
                 state_budget: int = DEFAULT_STATE_BUDGET) -> int | None:
    return solve_game(D, GameSpec(k, variant), state_budget).capture_time()


def cop_number(D: Digraph, k_max: int, variant: str = STANDARD,
               state_budget: int = DEFAULT_STATE_BUDGET) -> int | None:
    """Smallest k <= k_max winning for the cops, or None (meaning "> k_max")."""
    for k in range(1, k_max + 1):
        if capture_time(D, k, variant, state_budget) is not None:
            return k
    return None


def is_cop_dominated(D: Digraph, cycle) -> bool:
    """Can one standard cop catch a robber confined to pass-or-advance on
    this directed cycle?  The cop starts on the unique source when D has
    exactly one, otherwise on a best placement."""
    cycle = tuple(cycle)
    spec = GameSpec(1, STANDARD, Confinement(cycle, cycle))
    table = solve_game(D, spec)
    sources = D.sources()
    if len(sources) == 1:
        return table.placement_value((sources[0],)) is not None
    return table.capture_time() is not None


def safe_vertex_check(T: Digraph, robber: int, cops) -> int | None:
    """On a tournament, a vertex in the robber's closed out-neighbourhood
    that lies in no cop's closed out-neighbourhood, or None.

    A safe vertex lets the robber survive the next cop move from the current
    position; its absence over all placements is what a one-cop win needs.
    """
    n = T.n
    for u in range(n):
        for v in range(u + 1, n):
            if T.has_arc(u, v) == T.has_arc(v, u):
                raise ValueError(f"not a tournament: pair ({u}, {v})")
    threatened = set()
    for c in cops:
        threatened.add(c)
        threatened.update(T.out_adj[c])
    for s in sorted((robber,) + T.out_adj[robber]):
        if s not in threatened:
            return s
    return None
