# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops for Hamming-correlation counting.

Two entry points, mirrored by the pure-Python fallback module:

  shift_counts(x, y)  -- hit counts for every cyclic shift, by direct
                         position-by-position comparison (the slow exact
                         reference; O(L^2)).
  pair_scan(pos, p)   -- max hit count over all unordered row pairs and
                         all shifts of a set, via per-value position
                         differences (O(alphabet) per pair). Requires each
                         row to be non-repeating; the caller checks that.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def shift_counts(x, y):
    """Coincidence count for every cyclic shift of y against x."""
    cdef cnp.int64_t[::1] xv = np.ascontiguousarray(x, dtype=np.int64)
    cdef cnp.int64_t[::1] yv = np.ascontiguousarray(y, dtype=np.int64)
    cdef Py_ssize_t L = xv.shape[0]
    if yv.shape[0] != L:
        raise ValueError("length mismatch: %d vs %d" % (L, yv.shape[0]))
    out = np.zeros(L, dtype=np.int64)
    cdef cnp.int64_t[::1] ov = out
    cdef Py_ssize_t tau, i, j, c
    for tau in range(L):
        c = 0
        j = tau
        for i in range(L):
            if xv[i] == yv[j]:
                c += 1
            j += 1
            if j == L:
                j = 0
        ov[tau] = c
    return out


def pair_scan(pos, Py_ssize_t period):
    """Scan all unordered row pairs of a position table.

    pos[r, v] is the position of value v in row r, or -1 if absent; rows
    must be non-repeating sequences of length `period`. Returns
    (max_count, row_i, row_j, tau, min_pair_max) where (row_i, row_j, tau)
    is the lexicographically smallest triple attaining max_count and
    min_pair_max is the smallest per-pair maximum. With fewer than two
    rows, returns (0, -1, -1, -1, 0).
    """
    cdef cnp.int64_t[:, ::1] pv = np.ascontiguousarray(pos, dtype=np.int64)
    cdef Py_ssize_t m = pv.shape[0]
    cdef Py_ssize_t alpha = pv.shape[1]
    if m < 2:
        return 0, -1, -1, -1, 0

    hist = np.zeros(period, dtype=np.int64)
    stamp = np.full(period, -1, dtype=np.int64)
    cdef cnp.int64_t[::1] hv = hist
    cdef cnp.int64_t[::1] sv = stamp
    cdef Py_ssize_t i, j, v, tick = 0
    cdef cnp.int64_t pi, pj, tau, c
    cdef cnp.int64_t pair_max, pair_tau
    cdef cnp.int64_t best = -1, best_i = -1, best_j = -1, best_tau = -1
    cdef cnp.int64_t min_pair = -1

    for i in range(m - 1):
        for j in range(i + 1, m):
            pair_max = 0
            pair_tau = -1
            for v in range(alpha):
                pi = pv[i, v]
                if pi < 0:
                    continue
                pj = pv[j, v]
                if pj < 0:
                    continue
                tau = pj - pi
                if tau < 0:
                    tau += period
                if sv[tau] != tick:
                    sv[tau] = tick
                    hv[tau] = 0
                c = hv[tau] + 1
                hv[tau] = c
                if c > pair_max or (c == pair_max and tau < pair_tau):
                    pair_max = c
                    pair_tau = tau
            tick += 1
            if pair_max == 0:
                # No shared values: count 0 everywhere, first attained at 0.
                pair_tau = 0
            if pair_max > best:
                best = pair_max
                best_i = i
                best_j = j
                best_tau = pair_tau
            if min_pair < 0 or pair_max < min_pair:
                min_pair = pair_max
    return int(best), int(best_i), int(best_j), int(best_tau), int(min_pair)
