"""Correlation-counting kernels with a compiled fast path.

Importing this package selects the Cython extension when it was built and
falls back to the numpy implementation otherwise; `BACKEND` records which
one is active. Both expose the same two functions with identical exact
semantics (see `benchmarks/bench_kernels.py` for a speed comparison):

  shift_counts(x, y)    -> int64 array of per-shift coincidence counts
  pair_scan(pos, p)     -> (max, row_i, row_j, tau, min_pair_max)
"""

try:
    from . import _native as _impl

    BACKEND = "cython"
except ImportError:  # extension not built
    from . import _fallback as _impl

    BACKEND = "python"

shift_counts = _impl.shift_counts
pair_scan = _impl.pair_scan

__all__ = ["BACKEND", "shift_counts", "pair_scan"]
