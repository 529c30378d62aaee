"""Set-design filters: minimum adjacent distance and bad-frequency exclusion.

A deployment may require at least d_req between consecutive frequencies
within each hopping pattern (spectral spreading), and may need to avoid
locally jammed or reserved frequencies altogether. Both filters drop whole
sequences from a set and report each dropped k with a single reason;
sequence swapping between users is an assignment-time policy left to the
caller. Badness here is global to the set; per-user (location-specific)
bad-frequency maps are out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .sequences import SequenceSet

__all__ = [
    "BELOW_D_REQ",
    "CONTAINS_BAD_FREQUENCY",
    "DesignResult",
    "DesignSpec",
    "design",
    "filter_by_bad_frequencies",
    "filter_by_min_distance",
]

BELOW_D_REQ = "below-d_req"
CONTAINS_BAD_FREQUENCY = "contains-bad-frequency"


@dataclass(frozen=True)
class DesignSpec:
    """Filtering requirements for a sequence set."""

    d_req: int = 1
    bad_frequencies: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.d_req < 1:
            raise ValueError("d_req must be >= 1, got %d" % self.d_req)
        bad = frozenset(self.bad_frequencies)
        for f in bad:
            if f < 0:
                raise ValueError("bad frequency must be non-negative, got %d" % f)
        object.__setattr__(self, "bad_frequencies", bad)


@dataclass(frozen=True)
class DesignResult:
    """Partition of an input set into kept members and dropped (k, reason)."""

    kept: SequenceSet
    dropped: tuple[tuple[int, str], ...]

    @property
    def kept_ks(self) -> tuple[int, ...]:
        return self.kept.ks()

    @property
    def dropped_ks(self) -> tuple[int, ...]:
        return tuple(k for k, _ in self.dropped)


def filter_by_min_distance(sset: SequenceSet, d_req: int) -> DesignResult:
    """Keep members whose minimum adjacent distance is at least d_req."""
    if d_req < 1:
        raise ValueError("d_req must be >= 1, got %d" % d_req)
    keep, drop = [], []
    for s in sset:
        if s.min_distance >= d_req:
            keep.append(s)
        else:
            drop.append((s.k, BELOW_D_REQ))
    return DesignResult(SequenceSet(sset.p, tuple(keep)), tuple(drop))


def filter_by_bad_frequencies(sset: SequenceSet, bad: Iterable[int]) -> DesignResult:
    """Keep members whose elements avoid every frequency in bad."""
    bad = frozenset(bad)
    keep, drop = [], []
    for s in sset:
        if bad.isdisjoint(s.elements):
            keep.append(s)
        else:
            drop.append((s.k, CONTAINS_BAD_FREQUENCY))
    return DesignResult(SequenceSet(sset.p, tuple(keep)), tuple(drop))


def design(sset: SequenceSet, spec: DesignSpec) -> DesignResult:
    """Apply the distance filter, then the bad-frequency filter.

    A sequence failing both requirements is reported once, under the
    distance reason. The kept set equals the intersection of the two
    single-filter kept sets regardless of application order.
    """
    first = filter_by_min_distance(sset, spec.d_req)
    second = filter_by_bad_frequencies(first.kept, spec.bad_frequencies)
    reasons = dict(first.dropped)
    reasons.update(dict(second.dropped))
    dropped = tuple((k, reasons[k]) for k in sset.ks() if k in reasons)
    return DesignResult(second.kept, dropped)
