"""Compiled backtracking kernel for doubly-lexical incidence matrices.

Rows are points, columns are blocks.  A row is stored as an integer whose
bit ``v-1-c`` is set when the point lies on block ``c``, so comparing
rows as integers is comparing them lexicographically with column 0 most
significant.  The kernel enumerates every v x v 0/1 matrix with

* three ones per row and per column,
* no two rows sharing two columns (linearity),
* rows strictly decreasing and columns non-increasing (doubly lexical).

Every configuration has at least one such matrix, so the leaves cover
every isomorphism class.
"""
from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _setup(v, prefix, nprefix, rows, colsum, pm, starts):
    tied = (1 << (v - 1)) - 1
    for i in range(nprefix):
        m = prefix[i]
        rows[i] = m
        s = 0
        for c in range(v):
            if (m >> (v - 1 - c)) & 1:
                s |= 1 << c
                colsum[c] += 1
        for c in range(v):
            if (s >> c) & 1:
                pm[c] |= s & ~(1 << c)
        tied &= ~(s ^ (s >> 1))
        tied &= (1 << (v - 1)) - 1
    return tied


@njit(cache=True)
def search_leaves(v, prefix, nprefix, out, stop_depth):
    """Enumerate completions of the first ``nprefix`` rows.

    If ``stop_depth < v`` the search stops at that depth and writes the
    partial matrices (frontier) instead of leaves.  Returns the number of
    rows written to ``out``, or ``-1`` if ``out`` overflowed.
    """
    rows = np.zeros(v, np.int64)
    colsum = np.zeros(v, np.int64)
    pm = np.zeros(v, np.int64)
    starts = np.zeros(v, np.int64)
    tied = _setup(v, prefix, nprefix, rows, colsum, pm, starts)
    if nprefix == stop_depth:
        for j in range(nprefix):
            out[0, j] = rows[j]
        return 1

    # per-level iteration state
    ca = np.zeros(v + 1, np.int64)
    cb = np.zeros(v + 1, np.int64)
    cc = np.zeros(v + 1, np.int64)
    saved_tied = np.zeros(v + 1, np.int64)
    saved_pm = np.zeros((v + 1, 3), np.int64)
    must = np.zeros(v + 1, np.int64)
    nout = 0
    cap = out.shape[0]

    level = nprefix
    # prepare level
    ok = True
    r = v - level - 1
    mk = 0
    for x in range(v):
        need = 3 - colsum[x]
        if need - 1 > r:
            ok = False
        if need > r:
            mk |= 1 << x
    must[level] = mk
    if level > 0:
        prev = rows[level - 1]
        a0 = 0
        for x in range(v):
            if (prev >> (v - 1 - x)) & 1:
                a0 = x
                break
        ca[level] = a0
    else:
        ca[level] = 0
    cb[level] = ca[level]
    cc[level] = v  # forces advance on first iteration
    if not ok:
        return 0

    while level >= nprefix:
        # advance to the next valid candidate at this level
        a = ca[level]
        b = cb[level]
        c = cc[level] + 1
        found = False
        prev = rows[level - 1] if level > 0 else (1 << v)
        mk = must[level]
        while a < v and not found:
            if colsum[a] < 3:
                if b <= a:
                    b = a + 1
                    c = b + 1
                while b < v and not found:
                    if colsum[b] < 3 and not ((pm[a] >> b) & 1):
                        if c <= b:
                            c = b + 1
                        while c < v:
                            if colsum[c] < 3 and not ((pm[a] >> c) & 1) and not ((pm[b] >> c) & 1):
                                s = (1 << a) | (1 << b) | (1 << c)
                                m = (1 << (v - 1 - a)) | (1 << (v - 1 - b)) | (1 << (v - 1 - c))
                                if m < prev and (mk & ~s) == 0 and (tied & ~s & (s >> 1)) == 0:
                                    found = True
                                    break
                            c += 1
                    if not found:
                        b += 1
                        c = b + 1
            if not found:
                a += 1
                b = a + 1
                c = b + 1
        if not found:
            # backtrack: undo the row placed at level-1
            level -= 1
            if level < nprefix:
                break
            m = rows[level]
            pa = ca[level]
            pb = cb[level]
            pc = cc[level]
            colsum[pa] -= 1
            colsum[pb] -= 1
            colsum[pc] -= 1
            pm[pa] = saved_pm[level, 0]
            pm[pb] = saved_pm[level, 1]
            pm[pc] = saved_pm[level, 2]
            tied = saved_tied[level]
            continue
        ca[level] = a
        cb[level] = b
        cc[level] = c
        # place
        s = (1 << a) | (1 << b) | (1 << c)
        rows[level] = (1 << (v - 1 - a)) | (1 << (v - 1 - b)) | (1 << (v - 1 - c))
        saved_tied[level] = tied
        saved_pm[level, 0] = pm[a]
        saved_pm[level, 1] = pm[b]
        saved_pm[level, 2] = pm[c]
        colsum[a] += 1
        colsum[b] += 1
        colsum[c] += 1
        pm[a] |= (1 << b) | (1 << c)
        pm[b] |= (1 << a) | (1 << c)
        pm[c] |= (1 << a) | (1 << b)
        tied = tied & ~(s ^ (s >> 1)) & ((1 << (v - 1)) - 1)
        depth = level + 1
        if depth == v or depth == stop_depth:
            if nout >= cap:
                return -1
            for j in range(depth):
                out[nout, j] = rows[j]
            nout += 1
            # undo immediately and continue at this level
            colsum[a] -= 1
            colsum[b] -= 1
            colsum[c] -= 1
            pm[a] = saved_pm[level, 0]
            pm[b] = saved_pm[level, 1]
            pm[c] = saved_pm[level, 2]
            tied = saved_tied[level]
            continue
        # descend
        level = depth
        r = v - level - 1
        okl = True
        mk = 0
        for x in range(v):
            need = 3 - colsum[x]
            if need - 1 > r:
                okl = False
            if need > r:
                mk |= 1 << x
        must[level] = mk
        ca[level] = a
        cb[level] = a
        cc[level] = v
        if not okl:
            # no candidates possible: make the advance loop fail at once
            ca[level] = v
    return nout


def rows_to_blocks(v: int, rows) -> list[tuple[int, int, int]]:
    """Column ``c`` of the matrix becomes block ``c``; returns point triples."""
    cols: list[list[int]] = [[] for _ in range(v)]
    for p in range(v):
        m = int(rows[p])
        for c in range(v):
            if (m >> (v - 1 - c)) & 1:
                cols[c].append(p)
    return [tuple(col) for col in cols]
