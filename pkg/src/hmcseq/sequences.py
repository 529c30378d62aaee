"""Construction of prime sequences and their dispersed-element derivatives.

A prime sequence S_k over F_p is the permutation j -> j*k (mod p). The
derived sequence H_k replaces each element by the plain-integer sum of
itself and its successor (indices wrapping mod p, values not reduced),
which spreads the alphabet over {1, ..., 2p-3} and, for k = 1, ..., p-1,
yields a one-coincidence set of p-1 non-repeating sequences.

Storage is 0-based. Rendered output and the docs use 1-based positions
for H_k and 0-based j for S_k, matching the usual tabulations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .modp import validate_prime


def min_adjacent_distance(values) -> int:
    """Smallest |a[j+1] - a[j]| over consecutive positions.

    Non-cyclic: the gap between the last and first element does not count.
    Accepts an HmcSequence or any sequence of at least two integers.
    """
    elems = getattr(values, "elements", values)
    if len(elems) < 2:
        raise ValueError("need at least two elements")
    return min(abs(b - a) for a, b in zip(elems, elems[1:]))


@dataclass(frozen=True)
class PrimeSequence:
    """S_k: elements[j] = (j * k) mod p for j = 0, ..., p-1."""

    p: int
    k: int
    elements: tuple[int, ...]


@dataclass(frozen=True)
class HmcSequence:
    """H_k: adjacent integer sums of S_k, alphabet {1, ..., 2p-3}.

    elements[j-1] holds the 1-based j-th element a_j. For j < p,
    a_j = S_k[j-1] + S_k[j] as plain integers; a_p = S_k[p-1] = p - k.
    """

    p: int
    k: int
    elements: tuple[int, ...]
    min_distance: int = field(compare=False)

    def reversed_elements(self) -> tuple[int, ...]:
        return self.elements[::-1]


@dataclass(frozen=True)
class SequenceSet:
    """An ordered collection of H_k sequences sharing one prime p."""

    p: int
    sequences: tuple[HmcSequence, ...]

    def __post_init__(self):
        ks = [s.k for s in self.sequences]
        if len(set(ks)) != len(ks):
            raise ValueError("duplicate k in sequence set")
        for s in self.sequences:
            if s.p != self.p:
                raise ValueError(
                    "sequence H_%d has p=%d, set has p=%d" % (s.k, s.p, self.p)
                )

    def __len__(self) -> int:
        return len(self.sequences)

    def __iter__(self):
        return iter(self.sequences)

    def by_k(self, k: int) -> HmcSequence:
        for s in self.sequences:
            if s.k == k:
                return s
        raise KeyError(k)

    def ks(self) -> tuple[int, ...]:
        return tuple(s.k for s in self.sequences)

    def subset(self, keep: Iterable[int]) -> "SequenceSet":
        wanted = set(keep)
        return SequenceSet(self.p, tuple(s for s in self.sequences if s.k in wanted))


def prime_sequence(p: int, k: int) -> PrimeSequence:
    """Build S_k = (0, k, 2k, ...) with multiplication mod p."""
    validate_prime(p)
    if not 0 <= k <= p - 1:
        raise ValueError("k must be in [0, %d], got %d" % (p - 1, k))
    return PrimeSequence(p, k, tuple((j * k) % p for j in range(p)))


def hmc_sequence(p: int, k: int) -> HmcSequence:
    """Build H_k from S_k by summing adjacent elements as plain integers."""
    validate_prime(p)
    if not 1 <= k <= p - 1:
        raise ValueError("k must be in [1, %d], got %d" % (p - 1, k))
    s = prime_sequence(p, k).elements
    # s[0] = 0, so the wrap term leaves the final element at s[p-1] = p - k.
    elems = tuple(s[j] + s[(j + 1) % p] for j in range(p))
    return HmcSequence(p, k, elems, min_adjacent_distance(elems))


def hmc_set(p: int) -> SequenceSet:
    """The full set H_1, ..., H_{p-1} for a prime p >= 3."""
    validate_prime(p)
    return SequenceSet(p, tuple(hmc_sequence(p, k) for k in range(1, p)))
