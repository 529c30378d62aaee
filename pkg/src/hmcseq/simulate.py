"""Slot-synchronous FH-CDMA collision simulation over whole periods.

Each user hops through one sequence of a shared-p set with a cyclic delay;
two users hit when they land on equal frequency values in the same slot.
Hits per pair over one period must equal the Hamming cross-correlation of
the two sequences at the relative delay, and the simulator checks that
identity on every run. Time is slot-quantized and synchronous; partial
periods, sub-slot offsets, and RF effects (capture, near-far) are not
modeled.
"""

from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence, Union

from .analysis import CorrelationProfile, hamming_cross_correlation
from .sequences import HmcSequence, hmc_sequence

__all__ = [
    "HitReport",
    "PairHits",
    "ScenarioError",
    "UserAssignment",
    "load_scenario",
    "simulate_period",
    "sweep_delays",
]

# Conservative id charset keeps report rows safely unquoted in CSV.
_ID_RE = re.compile(r"[A-Za-z0-9_.-]+\Z")


class ScenarioError(ValueError):
    """Invalid scenario input (mixed p, duplicate k, malformed fields)."""


@dataclass(frozen=True)
class UserAssignment:
    """One user hopping through `sequence` with a cyclic slot delay."""

    user_id: str
    sequence: HmcSequence
    delay: int

    def __post_init__(self):
        if not _ID_RE.match(self.user_id):
            raise ScenarioError("invalid user id %r" % (self.user_id,))
        p = self.sequence.p
        if not 0 <= self.delay <= p - 1:
            raise ScenarioError(
                "delay must be in [0, %d], got %d" % (p - 1, self.delay)
            )

    def frequency_at(self, slot: int) -> int:
        return self.sequence.elements[(slot + self.delay) % self.sequence.p]


@dataclass(frozen=True)
class PairHits:
    """Hits between one unordered user pair over a full period."""

    user_a: str
    user_b: str
    k: int
    l: int
    tau: int
    hits: int


@dataclass(frozen=True)
class HitReport:
    p: int
    pairs: tuple[PairHits, ...]

    @property
    def max_hits(self) -> int:
        return max((h.hits for h in self.pairs), default=0)


def _validate(assignments: Sequence[UserAssignment]) -> int:
    if not assignments:
        raise ScenarioError("scenario needs at least one user")
    p = assignments[0].sequence.p
    seen_k, seen_id = set(), set()
    for a in assignments:
        if a.sequence.p != p:
            raise ScenarioError(
                "mixed periods: user %s has p=%d, expected %d"
                % (a.user_id, a.sequence.p, p)
            )
        if a.sequence.k in seen_k:
            raise ScenarioError("duplicate sequence k=%d" % a.sequence.k)
        if a.user_id in seen_id:
            raise ScenarioError("duplicate user id %r" % (a.user_id,))
        seen_k.add(a.sequence.k)
        seen_id.add(a.user_id)
    return p


def simulate_period(assignments: Sequence[UserAssignment]) -> HitReport:
    """Hop all users through p slots and count pairwise collisions.

    Pairs are reported in input order. A single user yields an empty pair
    list. Every pair total is cross-checked against the correlation of the
    two sequences at the relative delay; the two must agree exactly.
    """
    p = _validate(assignments)
    n = len(assignments)
    counts = {}
    for slot in range(p):
        freqs = [a.frequency_at(slot) for a in assignments]
        for i in range(n - 1):
            for j in range(i + 1, n):
                if freqs[i] == freqs[j]:
                    counts[i, j] = counts.get((i, j), 0) + 1
    pairs = []
    for i in range(n - 1):
        for j in range(i + 1, n):
            u, v = assignments[i], assignments[j]
            tau = (v.delay - u.delay) % p
            hits = counts.get((i, j), 0)
            expect = hamming_cross_correlation(u.sequence, v.sequence, tau)
            if hits != expect:
                raise RuntimeError(
                    "simulated hits %d disagree with correlation %d for "
                    "(%s, %s)" % (hits, expect, u.user_id, v.user_id)
                )
            pairs.append(
                PairHits(u.user_id, v.user_id, u.sequence.k, v.sequence.k, tau, hits)
            )
    return HitReport(p, tuple(pairs))


def sweep_delays(u: UserAssignment, v: UserAssignment) -> CorrelationProfile:
    """Hits per period at every relative delay of v against u."""
    _validate([u, v])
    p = u.sequence.p
    x, y = u.sequence.elements, v.sequence.elements
    values = []
    for tau in range(p):
        values.append(sum(1 for s in range(p) if x[s] == y[(s + tau) % p]))
    return CorrelationProfile(tuple(values))


def _scenario_dict(source) -> dict:
    if isinstance(source, dict):
        return source
    if isinstance(source, (str, Path)):
        text = Path(source).read_text()
    else:
        text = source.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ScenarioError("malformed scenario JSON: %s" % e) from None
    if not isinstance(data, dict):
        raise ScenarioError("scenario must be a JSON object")
    return data


def load_scenario(
    source: Union[str, Path, dict], seed: Optional[int] = None
) -> list[UserAssignment]:
    """Read a scenario ({"p", "users", optional "seed"}) into assignments.

    Users missing a "delay" get one drawn uniformly from [0, p-1] using the
    given seed (argument wins over the file's "seed" key). Omitting both the
    delays and any seed is an error, so that every scenario is reproducible.
    """
    data = _scenario_dict(source)
    unknown = set(data) - {"p", "users", "seed"}
    if unknown:
        raise ScenarioError("unknown scenario keys: %s" % sorted(unknown))
    if "p" not in data or "users" not in data:
        raise ScenarioError('scenario needs "p" and "users"')
    p = data["p"]
    if not isinstance(p, int) or isinstance(p, bool):
        raise ScenarioError('"p" must be an integer')
    users = data["users"]
    if not isinstance(users, list) or not users:
        raise ScenarioError('"users" must be a non-empty array')
    if seed is None:
        seed = data.get("seed")
        if seed is not None and (not isinstance(seed, int) or isinstance(seed, bool)):
            raise ScenarioError('"seed" must be an integer')
    rng = None if seed is None else random.Random(seed)

    assignments = []
    for entry in users:
        if not isinstance(entry, dict):
            raise ScenarioError("each user must be a JSON object")
        bad_keys = set(entry) - {"id", "k", "delay"}
        if bad_keys:
            raise ScenarioError("unknown user keys: %s" % sorted(bad_keys))
        if "id" not in entry or "k" not in entry:
            raise ScenarioError('each user needs "id" and "k"')
        uid, k = entry["id"], entry["k"]
        if not isinstance(uid, str):
            raise ScenarioError('user "id" must be a string')
        if not isinstance(k, int) or isinstance(k, bool):
            raise ScenarioError('user "k" must be an integer')
        try:
            seq = hmc_sequence(p, k)
        except ValueError as e:
            raise ScenarioError(str(e)) from None
        if "delay" in entry:
            delay = entry["delay"]
            if not isinstance(delay, int) or isinstance(delay, bool):
                raise ScenarioError('user "delay" must be an integer')
        elif rng is not None:
            delay = rng.randrange(p)
        else:
            raise ScenarioError(
                'user %s omits "delay" and the scenario has no seed' % uid
            )
        assignments.append(UserAssignment(uid, seq, delay))
    _validate(assignments)
    return assignments
