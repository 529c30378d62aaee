"""Exact arithmetic over the prime field F_p.

Everything here is plain integer math: no floating point, no probabilistic
primality testing. Residues carry their modulus so that mixing elements of
different fields raises instead of silently corrupting values.
"""

from __future__ import annotations

from dataclasses import dataclass


def is_prime(n: int) -> bool:
    """Deterministic primality test by trial division.

    Exact for any n this tool accepts (desk scale, n < 2**32).
    """
    if n < 0:
        raise ValueError("is_prime expects a non-negative integer, got %d" % n)
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def validate_prime(p: int) -> int:
    """Check that p is an odd prime >= 3 and return it.

    The sequence constructions divide by 2 in F_p, so p = 2 is rejected
    along with composites.
    """
    if not isinstance(p, int) or isinstance(p, bool):
        raise ValueError("p must be an integer, got %r" % (p,))
    if not is_prime(p):
        raise ValueError("%d is not prime" % p)
    if p < 3:
        raise ValueError("p must be an odd prime >= 3, got %d" % p)
    return p


@dataclass(frozen=True)
class Residue:
    """An element of F_p that remembers its modulus."""

    value: int
    modulus: int

    def __post_init__(self):
        validate_prime(self.modulus)
        if not 0 <= self.value < self.modulus:
            raise ValueError(
                "residue %d out of range for modulus %d" % (self.value, self.modulus)
            )


def _common_modulus(a: Residue, b: Residue) -> int:
    if a.modulus != b.modulus:
        raise ValueError("modulus mismatch: %d vs %d" % (a.modulus, b.modulus))
    return a.modulus


def add_mod(a: Residue, b: Residue) -> Residue:
    p = _common_modulus(a, b)
    return Residue((a.value + b.value) % p, p)


def sub_mod(a: Residue, b: Residue) -> Residue:
    p = _common_modulus(a, b)
    return Residue((a.value - b.value) % p, p)


def mul_mod(a: Residue, b: Residue) -> Residue:
    p = _common_modulus(a, b)
    return Residue((a.value * b.value) % p, p)


def inv_mod(a: Residue) -> Residue:
    """Multiplicative inverse in F_p; inv_mod(a) * a == 1 (mod p)."""
    if a.value == 0:
        raise ZeroDivisionError("0 has no multiplicative inverse mod %d" % a.modulus)
    # pow with a negative exponent uses the extended Euclidean algorithm.
    return Residue(pow(a.value, -1, a.modulus), a.modulus)
