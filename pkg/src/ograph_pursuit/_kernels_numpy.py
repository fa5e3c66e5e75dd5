"""NumPy backend: synchronous Bellman sweeps over the whole state table.

Same inputs and outputs as the numba attractor kernel, different algorithm:
value tables start at the INF sentinel (except capture states at 0) and one
full backward update is repeated until a sweep changes nothing.  Values only
decrease, so the loop stops at the unique fixed point; states still INF then
are robber wins.
"""

from __future__ import annotations

import numpy as np

INF32 = np.int32(1 << 28)


def build_pair_successors(conf_a, conf_b, mv_indptr, mv_data, pair_index, n_pairs):
    """CSR of successor configs for k=2 configs (conf_a[i] <= conf_b[i])."""
    C = conf_a.shape[0]
    la = (mv_indptr[conf_a + 1] - mv_indptr[conf_a]).astype(np.int64)
    lb = (mv_indptr[conf_b + 1] - mv_indptr[conf_b]).astype(np.int64)
    tot = la * lb
    total = int(tot.sum())
    cfg = np.repeat(np.arange(C, dtype=np.int64), tot)
    offsets = np.concatenate(([0], np.cumsum(tot)))
    t = np.arange(total, dtype=np.int64) - np.repeat(offsets[:-1], tot)
    lb_rep = np.repeat(lb, tot)
    x = mv_data[np.repeat(mv_indptr[conf_a], tot) + t // lb_rep]
    y = mv_data[np.repeat(mv_indptr[conf_b], tot) + t % lb_rep]
    pid = pair_index[np.minimum(x, y), np.maximum(x, y)].astype(np.int64)
    keys = np.unique(cfg * n_pairs + pid)
    out_cfg = keys // n_pairs
    data = keys % n_pairs
    counts = np.bincount(out_cfg, minlength=C)
    indptr = np.concatenate(([0], np.cumsum(counts))).astype(np.int64)
    return indptr, data.astype(np.int64)


def solve_tables(contains, conf_members,
                 csucc_indptr, csucc_data, cpred_indptr, cpred_data,
                 rmv_indptr, rmv_data, rpred_indptr, rpred_data,
                 vc, vr):
    """Fill vc/vr (pre-set to 0 on capture states, INF elsewhere) in place."""
    C, n = contains.shape
    rob_moves = [rmv_data[rmv_indptr[r]:rmv_indptr[r + 1]] for r in range(n)]
    succ_contains = contains[csucc_data, :]
    seg_starts = csucc_indptr[:-1]
    max_sweeps = C * n + 4
    for sweep in range(max_sweeps):
        changed = False
        # robber to move: best (max) over moves of the cop-to-move values
        masked = np.where(contains, 0, vc)
        for r in range(n):
            col = masked[:, rob_moves[r]].max(axis=1)
            col[contains[:, r]] = 0
            if not changed and not np.array_equal(col, vr[:, r]):
                changed = True
            vr[:, r] = col
        # cops to move: 1 + best (min) over successor configs, capture absorbs
        vals = np.where(succ_contains, 0, vr[csucc_data, :])
        mins = np.minimum.reduceat(vals, seg_starts, axis=0)
        new_vc = np.where(mins >= INF32, INF32, mins + 1).astype(np.int32)
        new_vc[contains] = 0
        if not np.array_equal(new_vc, vc):
            changed = True
            vc[:, :] = new_vc
        if not changed:
            return sweep + 1
    raise RuntimeError("value sweeps failed to reach a fixed point")
