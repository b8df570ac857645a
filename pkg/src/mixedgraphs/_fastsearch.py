"""Compiled inner loop for the arc-completion searches.

The DFS state lives in small int64 arrays (vertex sets as bitmasks, n <= 62)
and is advanced iteratively; the closure test is the same optimistic
all-pairs-within-k check as the pure-Python engine in search.py, which stays
available as a fallback and as a cross-check in the tests.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a hard dependency in practice
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(f):
            return f

        if args and callable(args[0]):
            return args[0]
        return wrap


@njit(cache=True)
def _all_pairs_within(rows, n, k, full):
    cur = rows.copy()
    done = 1
    while 2 * done <= k:
        nxt = np.empty(n, np.int64)
        for i in range(n):
            m = cur[i]
            acc = m
            for j in range(n):
                if (m >> j) & 1:
                    acc |= cur[j]
            nxt[i] = acc
        cur = nxt
        done *= 2
    while done < k:
        nxt = np.empty(n, np.int64)
        for i in range(n):
            m = cur[i]
            acc = m
            for j in range(n):
                if (m >> j) & 1:
                    acc |= rows[j]
            nxt[i] = acc
        cur = nxt
        done += 1
    for i in range(n):
        if cur[i] != full:
            return False
    return True


@njit(cache=True)
def _dfs_kernel(n, k, static_rows, edge_mask, arc_pred, sources, domains,
                domain_len, injective, budget, out_buf):
    """Iterative DFS over arc completions.

    domains is (m, max_len) padded with -1; out_buf is (cap, m).  Returns
    (examined, result_count, exhausted_flag, overflow_flag).
    """
    m = sources.shape[0]
    full = (np.int64(1) << n) - 1
    rows = static_rows.copy()
    for i in range(m):
        rows[sources[i]] = full

    target_of = np.full(n, -1, np.int64)  # source vertex -> assigned target
    choice = np.zeros(m, np.int64)        # next domain index to try per depth
    saved = np.zeros(m, np.int64)
    used = np.int64(0)

    examined = np.int64(0)
    count = np.int64(0)
    exhausted = False
    overflow = False

    depth = 0
    while depth >= 0:
        u = sources[depth]
        advanced = False
        while choice[depth] < domain_len[depth]:
            t = domains[depth, choice[depth]]
            choice[depth] += 1
            if injective and ((used >> t) & 1):
                continue
            # reverse arc t -> u already present?
            rev = ((arc_pred[u] >> t) & 1) != 0 or target_of[t] == u
            if rev:
                if injective:
                    continue
                if ((edge_mask[u] >> t) & 1) != 0:
                    continue
            saved[depth] = rows[u]
            rows[u] = static_rows[u] | (np.int64(1) << t)
            if depth + 1 == m:
                if budget >= 0 and examined >= budget:
                    exhausted = True
                    rows[u] = saved[depth]
                    break
                examined += 1
                if _all_pairs_within(rows, n, k, full):
                    if count < out_buf.shape[0]:
                        for i in range(m - 1):
                            out_buf[count, i] = target_of[sources[i]]
                        out_buf[count, m - 1] = t
                        count += 1
                    else:
                        overflow = True
                rows[u] = saved[depth]
            else:
                if _all_pairs_within(rows, n, k, full):
                    target_of[u] = t
                    used |= np.int64(1) << t
                    depth += 1
                    choice[depth] = 0
                    advanced = True
                    break
                rows[u] = saved[depth]
        if exhausted:
            break
        if not advanced:
            # backtrack
            depth -= 1
            if depth >= 0:
                u = sources[depth]
                t = target_of[u]
                rows[u] = saved[depth]
                used &= ~(np.int64(1) << t)
                target_of[u] = -1
    return examined, count, exhausted, overflow


def run_completion(n, k, static_rows, edge_mask, arc_pred, sources, domains,
                   injective, budget=None, result_cap=250_000):
    """Numba-backed equivalent of search._ArcCompletionDFS.run().

    Returns (examined, exhausted, list-of-assignments).
    """
    m = len(sources)
    if m == 0:
        full = (1 << n) - 1
        rows = np.array(static_rows, dtype=np.int64)
        ok = bool(_all_pairs_within(rows, n, k, np.int64(full)))
        return 1, False, ([()] if ok else [])
    max_len = max(len(d) for d in domains)
    dom = np.full((m, max_len), -1, dtype=np.int64)
    dom_len = np.zeros(m, dtype=np.int64)
    for i, d in enumerate(domains):
        dom[i, : len(d)] = d
        dom_len[i] = len(d)
    out = np.empty((result_cap, m), dtype=np.int64)
    examined, count, exhausted, overflow = _dfs_kernel(
        np.int64(n), np.int64(k),
        np.array(static_rows, dtype=np.int64),
        np.array(edge_mask, dtype=np.int64),
        np.array(arc_pred, dtype=np.int64),
        np.array(sources, dtype=np.int64),
        dom, dom_len, injective,
        np.int64(-1 if budget is None else budget),
        out,
    )
    if overflow:
        raise RuntimeError("survivor buffer overflow; raise result_cap")
    results = [tuple(int(x) for x in out[i]) for i in range(count)]
    return int(examined), bool(exhausted), results
