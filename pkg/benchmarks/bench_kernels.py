"""Compare the numba and pure-numpy solver backends on representative games.

Run as ``python benchmarks/bench_kernels.py``; pass ``--repeat N`` for more
stable numbers.  The two backends must produce identical value tables; this
script asserts that while timing them.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from ograph_pursuit._backend import available_backends, set_backend
from ograph_pursuit.digraph import Digraph, bidirected
from ograph_pursuit.families import (petersen_underlying, random_strong_ograph,
                                     ring_digraph)
from ograph_pursuit.solver import GameSpec, solve_game


def instances():
    yield "ring k=10, 1 cop", ring_digraph(10), GameSpec(k=1)
    yield "bidirected Petersen, 3 cops", bidirected(petersen_underlying()), \
        GameSpec(k=3)
    yield "random strong n=48, 2 cops", \
        random_strong_ograph(48, extra_arcs=60, seed=7), GameSpec(k=2)
    yield "random strong n=160, 1 cop", \
        random_strong_ograph(160, extra_arcs=400, seed=11), GameSpec(k=1)


def time_solve(D: Digraph, spec: GameSpec, repeat: int) -> tuple[float, object]:
    table = solve_game(D, spec)          # warm-up (JIT compile, caches)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        table = solve_game(D, spec)
        best = min(best, time.perf_counter() - t0)
    return best, table


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = available_backends()
    print(f"available backends: {', '.join(backends)}")
    rows = []
    for name, D, spec in instances():
        times = {}
        tables = {}
        for backend in backends:
            prev = set_backend(backend)
            try:
                times[backend], tables[backend] = time_solve(D, spec,
                                                             args.repeat)
            finally:
                set_backend(prev)
        if len(tables) == 2:
            a, b = (tables[x] for x in backends)
            assert np.array_equal(a.vc, b.vc) and np.array_equal(a.vr, b.vr), \
                f"backend outputs differ on {name}"
        rows.append((name, times))

    width = max(len(r[0]) for r in rows)
    header = f"{'instance':<{width}}  " + "  ".join(f"{b:>10}" for b in backends)
    if len(backends) == 2:
        header += f"  {'speedup':>8}"
    print(header)
    for name, times in rows:
        line = f"{name:<{width}}  " + "  ".join(
            f"{times[b] * 1e3:9.1f}ms" for b in backends)
        if len(times) == 2:
            t0, t1 = (times[b] for b in backends)
            line += f"  {t1 / t0:7.1f}x"
        print(line)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
