"""Character-sum and neighborhood audits over ranges of primes.

Each audit compares an exhaustively or randomly sampled quantity against its
proven bound, using exact integer comparisons (squared forms) for the
pass/fail decision and floats only in reported ratios:

  * complete character sums over k distinct shift points versus (k-1) sqrt(p),
  * common-neighborhood sizes |(N(x) & N(y)) \\ N(z)| in Paley graphs versus
    p/8 with deviation at most 5 sqrt(p) + 1 (also reported against the
    sharper 2 sqrt(p) + 2),
  * longest non-residue runs versus sqrt(p), where 13 is the lone exception,
  * the admissibility filter versus the 5 mod 24 congruence.

Sampling is seeded and reproducible; per-prime results are independent, so
callers may compute rows concurrently and assemble them in prime order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .graphs import paley_graph
from .numtheory import (
    PrimeField,
    character_sum,
    is_admissible,
    make_prime_field,
    max_nonresidue_run,
    primes_upto,
)

DEFAULT_SEED = 0
BURGESS_MAX_K = 4
BURGESS_SAMPLES = 200


@dataclass(frozen=True)
class BurgessCheck:
    p: int
    samples: int
    violations: int
    max_ratio: float  # max |sum| / ((k-1) sqrt(p)) over sampled tuples, k >= 2


def burgess_check(
    pf: PrimeField,
    rng: random.Random,
    max_k: int = BURGESS_MAX_K,
    samples_per_k: int = BURGESS_SAMPLES,
) -> BurgessCheck:
    """Sample distinct point tuples and test |character sum| <= (k-1) sqrt(p).

    The bound test is exact (squared integer comparison). For k = 1 the sum
    is identically zero and both sides vanish, so sampling starts at k = 2.
    """
    p = pf.p
    violations = 0
    total = 0
    max_ratio = 0.0
    for k in range(2, max_k + 1):
        if k >= p:
            break
        for _ in range(samples_per_k):
            points = tuple(rng.sample(range(p), k))
            s = character_sum(pf, points)
            total += 1
            if s * s > (k - 1) * (k - 1) * p:
                violations += 1
            ratio = abs(s) / ((k - 1) * p ** 0.5)
            if ratio > max_ratio:
                max_ratio = ratio
    return BurgessCheck(p=p, samples=total, violations=violations, max_ratio=max_ratio)


@dataclass(frozen=True)
class CommonNeighborCheck:
    p: int
    max_deviation: Fraction  # max over distinct triples of | |set| - p/8 |
    within_loose: bool  # deviation <= 5 sqrt(p) + 1
    within_sharp: bool  # deviation <= 2 sqrt(p) + 2


def common_neighbor_check(pf: PrimeField) -> CommonNeighborCheck:
    """Exhaustive common-neighborhood deviation over all distinct triples.

    Works on the Paley graph of pf via neighbor bitmasks; the deviation is
    kept as an exact rational (denominator 8) and the two bounds are tested
    by squared integer comparisons.
    """
    p = pf.p
    g = paley_graph(pf)
    masks = []
    for v in range(p):
        m = 0
        for w in g.neighbors(v):
            m |= 1 << w
        masks.append(m)
    full = (1 << p) - 1
    # deviation | count - p/8 | == |8*count - p| / 8; track the integer part
    worst = 0
    for x in range(p):
        mx = masks[x]
        for y in range(x + 1, p):
            mxy = mx & masks[y]
            for z in range(p):
                if z == x or z == y:
                    continue
                count = (mxy & (full ^ masks[z])).bit_count()
                dev = abs(8 * count - p)
                if dev > worst:
                    worst = dev
    # worst/8 <= 5 sqrt(p) + 1  <=>  (worst - 8)^2 <= 1600 p  (when worst > 8)
    within_loose = worst <= 8 or (worst - 8) ** 2 <= 1600 * p
    within_sharp = worst <= 16 or (worst - 16) ** 2 <= 256 * p
    return CommonNeighborCheck(
        p=p,
        max_deviation=Fraction(worst, 8),
        within_loose=within_loose,
        within_sharp=within_sharp,
    )


@dataclass(frozen=True)
class AuditRow:
    """One CSV row of the audit report."""

    p: int
    run_length: int
    run_within_sqrt: bool
    burgess_max_ratio: float | None
    burgess_violations: int | None
    cn_max_deviation: Fraction | None
    cn_within_loose: bool | None
    cn_within_sharp: bool | None
    admissible: bool
    admissible_matches_congruence: bool

    def csv_values(self) -> list[str]:
        return [
            str(self.p),
            str(self.run_length),
            "" if self.burgess_max_ratio is None else f"{self.burgess_max_ratio:.6f}",
            "" if self.cn_max_deviation is None else str(self.cn_max_deviation),
            "yes" if self.admissible else "no",
        ]


CSV_COLUMNS = ["p", "L_p", "burgess_max_ratio", "cn_max_deviation", "admissible"]


def audit_primes(
    max_prime: int,
    seed: int = DEFAULT_SEED,
    burgess_max: int = 199,
    cn_max: int = 101,
) -> list[AuditRow]:
    """Audit every odd prime up to max_prime; one row per prime.

    Burgess sampling runs for primes up to burgess_max and the cubic-cost
    common-neighbor scan for Paley-eligible primes (p = 1 mod 4) up to
    cn_max; the run-length and admissibility checks always run. Each prime
    draws its tuples from its own seeded generator, so rows do not depend on
    which other primes are in the range.
    """
    rows: list[AuditRow] = []
    for p in primes_upto(max_prime):
        if p == 2:
            continue
        pf = make_prime_field(p)
        run = max_nonresidue_run(pf)
        admissible = is_admissible(p)
        congruent = p > 5 and p % 24 == 5
        burgess = None
        if p <= burgess_max:
            rng = random.Random(seed * 15485863 + p)  # per-prime stream
            burgess = burgess_check(pf, rng)
        cn = None
        if p % 4 == 1 and p <= cn_max:
            cn = common_neighbor_check(pf)
        rows.append(
            AuditRow(
                p=p,
                run_length=run,
                run_within_sqrt=run * run <= p,
                burgess_max_ratio=None if burgess is None else burgess.max_ratio,
                burgess_violations=None if burgess is None else burgess.violations,
                cn_max_deviation=None if cn is None else cn.max_deviation,
                cn_within_loose=None if cn is None else cn.within_loose,
                cn_within_sharp=None if cn is None else cn.within_sharp,
                admissible=admissible,
                admissible_matches_congruence=admissible == congruent,
            )
        )
    return rows
