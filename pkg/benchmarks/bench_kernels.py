"""Timing comparison of the compiled and pure-Python correlation kernels.

Run directly:

    python3 benchmarks/bench_kernels.py

Times shift_counts (one sequence pair, every cyclic shift) and pair_scan
(every unordered pair of a full set) at two set sizes, for whichever
backends are importable, and prints the speedup when both are present.
"""

import timeit

import numpy as np

from hmcseq.kernels import BACKEND, _fallback
from hmcseq.sequences import hmc_sequence

try:
    from hmcseq.kernels import _native
except ImportError:
    _native = None

IMPLS = [("python", _fallback)] + ([("cython", _native)] if _native else [])


def set_arrays(p):
    arr = np.array(
        [hmc_sequence(p, k).elements for k in range(1, p)], dtype=np.int64
    )
    pos = np.full((p - 1, 2 * p - 2), -1, dtype=np.int64)
    for r in range(p - 1):
        for idx, v in enumerate(arr[r]):
            pos[r, v] = idx
    return arr, pos


def best_of(fn, repeat=5):
    return min(timeit.repeat(fn, repeat=repeat, number=1))


def fmt(seconds):
    if seconds < 1e-3:
        return "%7.1f us" % (seconds * 1e6)
    if seconds < 1.0:
        return "%7.2f ms" % (seconds * 1e3)
    return "%7.2f s " % seconds


def bench(label, calls):
    times = {name: best_of(calls[name]) for name, _ in IMPLS}
    line = "  %-34s" % label
    for name, _ in IMPLS:
        line += "  %s [%s]" % (fmt(times[name]), name)
    if len(times) == 2:
        line += "  speedup x%.1f" % (times["python"] / times["cython"])
    print(line)


def main():
    print("selected backend: %s" % BACKEND)
    if _native is None:
        print("compiled extension not importable; timing the fallback only")
    for p in (199, 997):
        arr, pos = set_arrays(p)
        x = list(arr[0])
        y = list(arr[1])
        npairs = arr.shape[0] * (arr.shape[0] - 1) // 2
        print()
        print("p = %d (%d sequences, %d pairs)" % (p, arr.shape[0], npairs))
        bench(
            "shift_counts, one pair",
            {name: (lambda impl=impl: impl.shift_counts(x, y)) for name, impl in IMPLS},
        )
        bench(
            "pair_scan, all pairs",
            {name: (lambda impl=impl: impl.pair_scan(pos, p)) for name, impl in IMPLS},
        )


if __name__ == "__main__":
    main()
