"""Horizon-bounded minimax cross-check for the production solver.

Implements the game rules directly over explicit move sets: V[t] maps a
(cops, robber) position to the guaranteed capture time when at most t rounds
remain, computed by unrolling one round of min/max at a time.  Positions
still infinite at a horizon of state-count-plus-one are robber wins.  Shares
no code or data layout with the solver; deliberately small and slow.
"""

from __future__ import annotations

import itertools
import math

from .digraph import Digraph
from .solver import FULLY_ACTIVE, STANDARD, GameSpec

MAX_VERTICES = 6
MAX_COPS = 2

INF = math.inf


def _cop_team_moves(D: Digraph, cops: tuple[int, ...], hold: bool):
    options = []
    for c in cops:
        opts = ((c,) if hold else ()) + D.out_adj[c]
        options.append(opts)
    return {tuple(sorted(pick)) for pick in itertools.product(*options)}


def _robber_options(D: Digraph, spec: GameSpec, r: int, hold: bool):
    conf = spec.confinement
    if conf is None:
        return ((r,) if hold else ()) + D.out_adj[r]
    if conf.forward_cycle is not None:
        cyc = conf.forward_cycle
        ahead = {cyc[i]: cyc[(i + 1) % len(cyc)] for i in range(len(cyc))}
        step = (ahead[r],) if r in ahead else ()
        return ((r,) if hold else ()) + step
    allowed = set(conf.allowed)
    return ((r,) if hold else ()) + tuple(w for w in D.out_adj[r] if w in allowed)


def oracle_value(D: Digraph, spec: GameSpec, depth_bound: int | None = None
                 ) -> int | None:
    """Capture time from optimal placement, or None for a robber win.

    Same contract as ``solve_game(...).capture_time()`` but computed by the
    bounded recursion above; restricted to n <= 6 and k <= 2.
    """
    if D.n > MAX_VERTICES or spec.k > MAX_COPS:
        raise ValueError(
            f"oracle is limited to n <= {MAX_VERTICES}, k <= {MAX_COPS}")
    if spec.variant not in (STANDARD, FULLY_ACTIVE):
        raise ValueError(f"unknown variant {spec.variant!r}")
    hold = spec.variant == STANDARD
    if not hold:
        for v in range(D.n):
            if not D.out_adj[v]:
                raise ValueError("fully active play needs out-degree >= 1")

    placements = list(itertools.combinations_with_replacement(range(D.n), spec.k))
    if spec.confinement is not None:
        starts = sorted(set(spec.confinement.allowed))
    else:
        starts = list(range(D.n))
    for r in starts:
        if not _robber_options(D, spec, r, hold):
            raise ValueError(f"robber has no legal move at vertex {r}")

    positions = [(c, r) for c in placements for r in range(D.n)]
    if depth_bound is None:
        depth_bound = len(positions) + 1

    value = {(c, r): (0 if r in c else INF) for c, r in positions}
    for _ in range(depth_bound):
        nxt = {}
        for c, r in positions:
            if r in c:
                nxt[(c, r)] = 0
                continue
            best = INF
            for c2 in _cop_team_moves(D, c, hold):
                if r in c2:
                    outcome = 1
                else:
                    worst = 0
                    for r2 in _robber_options(D, spec, r, hold):
                        if r2 in c2:
                            move_val = 1
                        else:
                            move_val = 1 + value[(c2, r2)]
                        worst = max(worst, move_val)
                    outcome = worst
                best = min(best, outcome)
            nxt[(c, r)] = best
        if nxt == value:
            break
        value = nxt

    overall = INF
    for c in placements:
        worst = max(value[(c, r)] for r in starts)
        overall = min(overall, worst)
    return None if overall == INF else int(overall)
