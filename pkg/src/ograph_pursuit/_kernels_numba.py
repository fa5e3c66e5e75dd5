"""Numba backend: event-driven retrograde (attractor) kernel.

States are (cop-config index i, robber vertex r, side to move).  Capture
states carry value 0; a cop state is labeled 1 + value of its first-labeled
successor (labels appear in value order, so that is the min); a robber state
is labeled when its last non-capturing successor is labeled (the max).
States never labeled are robber wins and keep the INF sentinel.
"""

from __future__ import annotations

import numpy as np
from numba import njit

INF32 = np.int32(1 << 28)


@njit(cache=True, nogil=True)
def build_pair_successors(conf_a, conf_b, mv_indptr, mv_data, pair_index, n_pairs):
    """CSR of successor configs for k=2 configs (conf_a[i] <= conf_b[i])."""
    C = conf_a.shape[0]
    stamp = np.full(n_pairs, -1, np.int64)
    counts = np.zeros(C, np.int64)
    for i in range(C):
        a = conf_a[i]
        b = conf_b[i]
        c = 0
        for s in range(mv_indptr[a], mv_indptr[a + 1]):
            x = mv_data[s]
            for t in range(mv_indptr[b], mv_indptr[b + 1]):
                y = mv_data[t]
                p = pair_index[min(x, y), max(x, y)]
                if stamp[p] != i:
                    stamp[p] = i
                    c += 1
        counts[i] = c
    indptr = np.zeros(C + 1, np.int64)
    for i in range(C):
        indptr[i + 1] = indptr[i] + counts[i]
    data = np.empty(indptr[C], np.int64)
    stamp[:] = -1
    for i in range(C):
        a = conf_a[i]
        b = conf_b[i]
        pos = indptr[i]
        for s in range(mv_indptr[a], mv_indptr[a + 1]):
            x = mv_data[s]
            for t in range(mv_indptr[b], mv_indptr[b + 1]):
                y = mv_data[t]
                p = pair_index[min(x, y), max(x, y)]
                if stamp[p] != i:
                    stamp[p] = i
                    data[pos] = p
                    pos += 1
        # keep each config's successor list sorted for determinism
        data[indptr[i]:indptr[i + 1]].sort()
    return indptr, data


@njit(cache=True, nogil=True)
def solve_tables(contains, conf_members,
                 csucc_indptr, csucc_data, cpred_indptr, cpred_data,
                 rmv_indptr, rmv_data, rpred_indptr, rpred_data,
                 vc, vr):
    """Fill vc/vr (pre-set to 0 on capture states, INF elsewhere) in place.

    Returns the number of value levels processed.
    """
    C, n = contains.shape
    k = conf_members.shape[1]
    counter = np.zeros((C, n), np.int32)
    cap = 2 * C * n + 2
    cur = np.empty(cap, np.int64)
    nxt = np.empty(cap, np.int64)
    cur_len = 0
    nxt_len = 0

    # Robber-state move counters; counter 0 means every move is onto a cop.
    for i in range(C):
        for r in range(n):
            if contains[i, r]:
                continue
            cnt = 0
            for t in range(rmv_indptr[r], rmv_indptr[r + 1]):
                if not contains[i, rmv_data[t]]:
                    cnt += 1
            counter[i, r] = cnt
            if cnt == 0:
                vr[i, r] = 0
                cur[cur_len] = ((i * n + r) << 1) | 1
                cur_len += 1

    # Cop states with a capturing move are labeled 1 (successor value 0).
    for i in range(C):
        for t in range(csucc_indptr[i], csucc_indptr[i + 1]):
            j = csucc_data[t]
            for s in range(k):
                r = conf_members[j, s]
                if not contains[i, r] and vc[i, r] >= INF32:
                    vc[i, r] = 1
                    nxt[nxt_len] = (i * n + r) << 1
                    nxt_len += 1

    level = 0
    processed = 0
    while cur_len > 0 or nxt_len > 0:
        qi = 0
        while qi < cur_len:
            code = cur[qi]
            qi += 1
            sid = code >> 1
            i = sid // n
            r = sid % n
            if code & 1:
                # robber state (i, r) labeled `level`: cop predecessors get level+1
                for t in range(cpred_indptr[i], cpred_indptr[i + 1]):
                    i0 = cpred_data[t]
                    if not contains[i0, r] and vc[i0, r] >= INF32:
                        vc[i0, r] = level + 1
                        nxt[nxt_len] = (i0 * n + r) << 1
                        nxt_len += 1
            else:
                # cop state (i, r) labeled `level`: robber predecessors (i, r0)
                for t in range(rpred_indptr[r], rpred_indptr[r + 1]):
                    r0 = rpred_data[t]
                    if contains[i, r0] or vr[i, r0] < INF32:
                        continue
                    counter[i, r0] -= 1
                    if counter[i, r0] == 0:
                        vr[i, r0] = level
                        cur[cur_len] = ((i * n + r0) << 1) | 1
                        cur_len += 1
        processed += cur_len
        tmp = cur
        cur = nxt
        nxt = tmp
        cur_len = nxt_len
        nxt_len = 0
        level += 1
    return level
