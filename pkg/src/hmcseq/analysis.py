"""Hamming-correlation analysis and whole-set property verification.

The periodic Hamming cross-correlation of two equal-length sequences
counts, for each cyclic shift tau, the positions where the sequences
carry the same value. For the dispersed sets built in `sequences`, every
pair of distinct member sequences collides at most once per period at
every shift; `verify_lemmas` checks that and the other structural facts
(element distinctness and range, midpoint and mirror identities, reversal
symmetry, boundary distances, zero out-of-phase autocorrelation) by
brute force for any given prime.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .kernels import pair_scan, shift_counts
from .modp import validate_prime
from .sequences import SequenceSet, hmc_set, min_adjacent_distance

__all__ = [
    "CHECK_NAMES",
    "CorrelationProfile",
    "CheckResult",
    "OneCoincidenceResult",
    "VerificationReport",
    "WorstPair",
    "correlation_profile",
    "hamming_cross_correlation",
    "min_adjacent_distance",
    "verify_lemmas",
    "verify_one_coincidence",
]


def _values(seq) -> Sequence[int]:
    return getattr(seq, "elements", seq)


def hamming_cross_correlation(x, y, tau: int) -> int:
    """Number of coincidences between x and y shifted cyclically by tau."""
    xs, ys = _values(x), _values(y)
    L = len(xs)
    if len(ys) != L:
        raise ValueError("length mismatch: %d vs %d" % (L, len(ys)))
    if L < 1:
        raise ValueError("sequences must be non-empty")
    if not 0 <= tau < L:
        raise ValueError("tau must be in [0, %d], got %d" % (L - 1, tau))
    return sum(1 for i in range(L) if xs[i] == ys[(i + tau) % L])


@dataclass(frozen=True)
class CorrelationProfile:
    """Hit counts for every cyclic shift of one sequence against another."""

    values: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.values)

    @property
    def max(self) -> int:
        return max(self.values)

    @property
    def total(self) -> int:
        return sum(self.values)


def correlation_profile(x, y) -> CorrelationProfile:
    """Full shift-indexed profile, by direct counting at every shift."""
    xs, ys = _values(x), _values(y)
    if len(xs) != len(ys):
        raise ValueError("length mismatch: %d vs %d" % (len(xs), len(ys)))
    if len(xs) < 1:
        raise ValueError("sequences must be non-empty")
    return CorrelationProfile(tuple(int(c) for c in shift_counts(xs, ys)))


@dataclass(frozen=True)
class WorstPair:
    """The pair/shift with the most hits found by a set scan."""

    k: int
    l: int
    tau: int
    count: int


@dataclass(frozen=True)
class OneCoincidenceResult:
    ok: bool
    worst: Optional[WorstPair]


def _position_table(arr: np.ndarray):
    """Map a (m, L) value table to a (m, n_values) position table.

    Returns None when some row repeats a value, in which case positions
    are ambiguous and callers must fall back to direct counting.
    """
    m, L = arr.shape
    srt = np.sort(arr, axis=1)
    if m and L > 1 and bool((srt[:, 1:] == srt[:, :-1]).any()):
        return None
    vals = np.unique(arr)
    idx = np.searchsorted(vals, arr)
    pos = np.full((m, vals.size), -1, dtype=np.int64)
    pos[np.arange(m)[:, None], idx] = np.arange(L)[None, :]
    return pos


def verify_one_coincidence(sset: SequenceSet) -> OneCoincidenceResult:
    """Brute-force every unordered pair and every shift of a set.

    ok is True iff no pair collides more than once at any shift. The worst
    offender is the lexicographically smallest (k, l, tau) attaining the
    maximal count (None when the set has fewer than two members).
    """
    seqs = sorted(sset.sequences, key=lambda s: s.k)
    if len(seqs) < 2:
        return OneCoincidenceResult(True, None)
    arr = np.array([s.elements for s in seqs], dtype=np.int64)
    L = arr.shape[1]
    pos = _position_table(arr)
    if pos is not None:
        mx, i, j, tau, _ = pair_scan(pos, L)
    else:
        mx, i, j, tau = -1, -1, -1, -1
        for a in range(len(seqs) - 1):
            for b in range(a + 1, len(seqs)):
                counts = shift_counts(arr[a], arr[b])
                pm = int(counts.max())
                if pm > mx:
                    mx, i, j = pm, a, b
                    tau = int(np.flatnonzero(counts == pm)[0])
    worst = WorstPair(seqs[i].k, seqs[j].k, int(tau), int(mx))
    return OneCoincidenceResult(mx <= 1, worst)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class VerificationReport:
    """Pass/fail per structural property of the full set for one prime."""

    p: int
    checks: tuple[CheckResult, ...]
    max_cross_correlation: int
    max_out_of_phase_autocorrelation: int

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> tuple[CheckResult, ...]:
        return tuple(c for c in self.checks if not c.passed)


CHECK_NAMES = (
    "distinct-elements",
    "element-range",
    "midpoint-value",
    "endpoint-sum",
    "mirror-sum",
    "mirror-sum-center",
    "one-coincidence",
    "time-reversal",
    "column-reversal",
    "boundary-distances",
    "autocorrelation-zero",
)


def _first_bad(mask: np.ndarray):
    """Row-major index of the first True entry of a 2-D mask, or None."""
    flat = np.flatnonzero(mask.ravel())
    if flat.size == 0:
        return None
    r, c = divmod(int(flat[0]), mask.shape[1])
    return r, c


def verify_lemmas(p: int) -> VerificationReport:
    """Check every structural property of the full set for prime p.

    Each check is independent and reported under its own name; details
    carry the first counterexample when a check fails. The mirror identity
    at the exact center column is reported separately from the plainly
    stated off-center range.
    """
    validate_prime(p)
    sset = hmc_set(p)
    arr = np.array([s.elements for s in sset.sequences], dtype=np.int64)
    m = p - 1
    t = (p - 1) // 2
    checks = []

    def add(name, passed, detail=""):
        checks.append(CheckResult(name, bool(passed), detail if not passed else ""))

    # Pairwise-distinct elements within every sequence.
    srt = np.sort(arr, axis=1)
    dup = srt[:, 1:] == srt[:, :-1]
    bad = _first_bad(dup)
    add(
        "distinct-elements",
        bad is None,
        "" if bad is None else "k=%d value=%d repeats" % (bad[0] + 1, srt[bad[0], bad[1]]),
    )

    # Every element within {1, ..., 2p-3}.
    out = (arr < 1) | (arr > 2 * p - 3)
    bad = _first_bad(out)
    add(
        "element-range",
        bad is None,
        "" if bad is None else "k=%d pos=%d value=%d" % (bad[0] + 1, bad[1] + 1, arr[bad]),
    )

    # Center column equals p.
    mid_bad = np.flatnonzero(arr[:, t] != p)
    add(
        "midpoint-value",
        mid_bad.size == 0,
        "" if mid_bad.size == 0 else "k=%d got=%d" % (mid_bad[0] + 1, arr[mid_bad[0], t]),
    )

    # Last element is p minus the first.
    end_bad = np.flatnonzero(arr[:, p - 1] != p - arr[:, 0])
    add(
        "endpoint-sum",
        end_bad.size == 0,
        ""
        if end_bad.size == 0
        else "k=%d first=%d last=%d" % (end_bad[0] + 1, arr[end_bad[0], 0], arr[end_bad[0], p - 1]),
    )

    # Positions i and p-i+1 (1-based) sum to 2p, for 2 <= i < t ...
    def mirror_check(lo, hi):
        for i in range(lo, hi):
            bad_rows = np.flatnonzero(arr[:, p - i] + arr[:, i - 1] != 2 * p)
            if bad_rows.size:
                r = int(bad_rows[0])
                return "k=%d i=%d a_i=%d partner=%d" % (r + 1, i, arr[r, i - 1], arr[r, p - i])
        return ""

    detail = mirror_check(2, t)
    add("mirror-sum", detail == "", detail)

    # ... and at the center pair i = t as well (needs t >= 2 to be a
    # distinct pair; vacuous for p = 3).
    detail = mirror_check(t, t + 1) if t >= 2 else ""
    add("mirror-sum-center", detail == "", detail)

    # At most one coincidence for any pair at any shift.
    occ = verify_one_coincidence(sset)
    max_cross = occ.worst.count if occ.worst else 0
    add(
        "one-coincidence",
        occ.ok,
        ""
        if occ.ok
        else "k=%d l=%d tau=%d count=%d" % (occ.worst.k, occ.worst.l, occ.worst.tau, occ.worst.count),
    )

    # Row for k reversed equals the row for p-k.
    rev_bad = _first_bad(arr != arr[::-1, ::-1])
    add(
        "time-reversal",
        rev_bad is None,
        "" if rev_bad is None else "k=%d pos=%d" % (rev_bad[0] + 1, rev_bad[1] + 1),
    )

    # Column i read down equals column p+1-i read up (1-based columns).
    col_bad = None
    for i in range(1, p + 1):
        mism = np.flatnonzero(arr[::-1, i - 1] != arr[:, p - i])
        if mism.size:
            col_bad = "col=%d row=%d" % (i, int(mism[0]) + 1)
            break
    add("column-reversal", col_bad is None, col_bad or "")

    # Extreme-k members have gap exactly 2, center-k members exactly 1.
    dists = {s.k: s.min_distance for s in sset.sequences}
    problems = []
    if t >= 2:
        # At p = 3 the extreme and center indices coincide and the gap is 1.
        for k in (1, p - 1):
            if dists[k] != 2:
                problems.append("d(H_%d)=%d want 2" % (k, dists[k]))
    for k in (t, t + 1):
        if dists[k] != 1:
            problems.append("d(H_%d)=%d want 1" % (k, dists[k]))
    add("boundary-distances", not problems, "; ".join(problems))

    # Non-repeating rows have zero out-of-phase autocorrelation; any row
    # with repeats gets the exact maximum by direct counting.
    max_auto = 0
    auto_detail = ""
    dup_rows = np.flatnonzero(dup.any(axis=1))
    for r in dup_rows:
        worst = int(shift_counts(arr[r], arr[r])[1:].max())
        if worst > max_auto:
            max_auto = worst
            auto_detail = "k=%d max=%d" % (r + 1, worst)
    add("autocorrelation-zero", max_auto == 0, auto_detail)

    return VerificationReport(p, tuple(checks), int(max_cross), int(max_auto))
