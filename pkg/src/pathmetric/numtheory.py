"""Quadratic-residue machinery over prime fields.

Legendre symbols, residue/non-residue tables, the admissibility filter for
the Paley path-system construction, non-residue run lengths, and complete
character sums. Everything here is exact integer arithmetic; a PrimeField is
immutable after construction and safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field


def is_prime(n: int) -> bool:
    """Deterministic trial division; adequate for the desk-scale moduli used here."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def smallest_factor(n: int) -> int:
    """Smallest nontrivial divisor of a composite n (used for error messages)."""
    if n % 2 == 0:
        return 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return f
        f += 2
    return n


def primes_upto(limit: int) -> list[int]:
    """All primes <= limit, ascending (sieve of Eratosthenes)."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(limit ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i, flag in enumerate(sieve) if flag]


def _require_odd_prime(p: int) -> None:
    if p % 2 == 0:
        raise ValueError(f"{p} is even; modulus must be an odd prime")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime: divisible by {smallest_factor(p)}")


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) in {-1, 0, +1} by Euler's criterion.

    Returns 0 iff a == 0 mod p, +1 iff a is a nonzero square mod p,
    -1 otherwise. Raises ValueError unless p is an odd prime.
    """
    _require_odd_prime(p)
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


@dataclass(frozen=True)
class PrimeField:
    """An odd prime p together with its residue tables.

    residues holds the nonzero squares mod p; legendre_table maps every
    nonzero element to +1/-1 and is multiplicative.
    """

    p: int
    residues: frozenset[int]
    legendre_table: dict[int, int] = field(repr=False)

    def legendre(self, a: int) -> int:
        a %= self.p
        if a == 0:
            return 0
        return self.legendre_table[a]

    def is_residue(self, a: int) -> bool:
        return a % self.p in self.residues

    @property
    def nonresidues(self) -> frozenset[int]:
        return frozenset(range(1, self.p)) - self.residues


def make_prime_field(p: int) -> PrimeField:
    """Build the residue tables for an odd prime p.

    Raises ValueError for even or composite input, naming a failing divisor.
    """
    _require_odd_prime(p)
    residues = frozenset((x * x) % p for x in range(1, p))
    table = {a: (1 if a in residues else -1) for a in range(1, p)}
    return PrimeField(p=p, residues=residues, legendre_table=table)


def is_admissible(p: int) -> bool:
    """Whether p is a prime > 5 with -1 a quadratic residue and 2, 3 non-residues.

    These are exactly the primes carrying the Paley path-system construction;
    they coincide with primes congruent to 5 mod 24.
    """
    if p <= 5 or not is_prime(p):
        return False
    return (
        legendre(p - 1, p) == 1
        and legendre(2, p) == -1
        and legendre(3, p) == -1
    )


def admissible_primes(limit: int) -> list[int]:
    """All admissible primes <= limit, ascending."""
    if limit < 2:
        raise ValueError("limit must be at least 2")
    return [p for p in primes_upto(limit) if p > 5 and is_admissible(p)]


def max_nonresidue_run(pf: PrimeField) -> int:
    """Length of the longest run a, a+1, ..., a+L-1 of consecutive non-residues.

    Runs live inside 1..p-1: zero is neither residue nor non-residue, so a run
    never crosses 0 even though indices are taken mod p.
    """
    best = 0
    run = 0
    for a in range(1, pf.p):
        if pf.legendre_table[a] == -1:
            run += 1
            if run > best:
                best = run
        else:
            run = 0
    return best


def character_sum(pf: PrimeField, points: tuple[int, ...] | list[int]) -> int:
    """Sum over x in F_p of the product of (x - a_i / p) for the given points.

    Terms where x coincides with some point contribute 0. Points must be
    pairwise distinct mod p and satisfy 1 <= k < p.
    """
    p = pf.p
    pts = [a % p for a in points]
    if len(set(pts)) != len(pts):
        raise ValueError(f"points must be pairwise distinct mod {p}: {points}")
    if not 1 <= len(pts) < p:
        raise ValueError(f"need 1 <= k < p, got k={len(pts)}")
    table = pf.legendre_table
    total = 0
    for x in range(p):
        prod = 1
        for a in pts:
            v = x - a
            if v == 0:
                prod = 0
                break
            prod *= table[v % p]
        total += prod
    return total
