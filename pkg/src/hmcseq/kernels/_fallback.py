"""Pure-Python (numpy) fallback for the compiled correlation kernels.

Same contracts as the extension module: exact integer counting, identical
return values. Used automatically when the extension is not built; kept
correct first, vectorized second.
"""

from __future__ import annotations

import numpy as np


def shift_counts(x, y):
    """Coincidence count for every cyclic shift of y against x."""
    xv = np.ascontiguousarray(x, dtype=np.int64)
    yv = np.ascontiguousarray(y, dtype=np.int64)
    if xv.shape != yv.shape or xv.ndim != 1:
        raise ValueError("length mismatch: %r vs %r" % (xv.shape, yv.shape))
    L = xv.shape[0]
    yy = np.concatenate([yv, yv])
    out = np.empty(L, dtype=np.int64)
    for tau in range(L):
        out[tau] = np.count_nonzero(xv == yy[tau : tau + L])
    return out


def pair_scan(pos, period):
    """Scan all unordered row pairs of a position table.

    See the extension module for the contract. Vectorized one row against
    all later rows at a time; per-pair shift histograms come from a single
    offset bincount per batch.
    """
    pv = np.ascontiguousarray(pos, dtype=np.int64)
    m = pv.shape[0]
    if m < 2:
        return 0, -1, -1, -1, 0

    best = -1
    best_i = best_j = best_tau = -1
    min_pair = -1
    for i in range(m - 1):
        rest = pv[i + 1 :]
        both = (pv[i] >= 0) & (rest >= 0)
        taus = (rest - pv[i]) % period
        n = rest.shape[0]
        rows = np.broadcast_to(np.arange(n)[:, None], taus.shape)
        flat = rows[both] * period + taus[both]
        hists = np.bincount(flat, minlength=n * period).reshape(n, period)
        pair_maxes = hists.max(axis=1)

        batch_min = int(pair_maxes.min())
        if min_pair < 0 or batch_min < min_pair:
            min_pair = batch_min
        batch_best = int(pair_maxes.max())
        if batch_best > best:
            r = int(pair_maxes.argmax())  # first (smallest j) attaining it
            best = batch_best
            best_i = i
            best_j = i + 1 + r
            if batch_best == 0:
                best_tau = 0
            else:
                best_tau = int(np.flatnonzero(hists[r] == batch_best)[0])
    return best, best_i, best_j, best_tau, min_pair
