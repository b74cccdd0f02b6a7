"""Denominator classification of regular weights and the completion profile.

Each regular weight a is judged by the exact phases <omega_j, a>/m mod 1 of
the evaluation character on the generating weights.  D_a is the lcm of the
phase denominators; because denominator(x + y) divides lcm(denominator x,
denominator y), the fundamental weights already determine the denominator
behaviour of every weight.  A weight contributes one copy of Z_p to the
completion exactly when D_a is a power of the prime p; weights whose D_a
mixes several primes contribute nothing and are reported as unclassified.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .alcove import enumerate_regular_weights
from .root_systems import LieType, RootSystem, Weight, inner_product


class InvariantViolation(RuntimeError):
    """A structural fact the pipeline relies on failed at runtime (data corruption or a real counterexample)."""


@dataclass(frozen=True)
class DenominatorProfile:
    weight: Weight
    lcm_denominator: int

    def __post_init__(self):
        if self.lcm_denominator <= 1:
            raise InvariantViolation(
                f"weight {self.weight} has trivial phase denominator {self.lcm_denominator}; "
                "the dimension homomorphism never factors through a level evaluation, so every "
                "regular weight must have some generator phase with denominator > 1"
            )


@dataclass(frozen=True)
class CompletionProfile:
    """The abelian group sum(Z_p ^ counts[p]) plus bookkeeping of the regular weights behind it."""

    lie_type: LieType
    level: int
    counts: dict[int, int]
    regular_total: int
    unclassified: int

    def rendered(self) -> str:
        """Human-readable group, e.g. 'Z_2^3 (+) Z_5'."""
        if not self.counts:
            return "0"
        parts = []
        for p in sorted(self.counts):
            k = self.counts[p]
            parts.append(f"Z_{p}" if k == 1 else f"Z_{p}^{k}")
        return " (+) ".join(parts)


def phi_phase(rs: RootSystem, a: Weight, m: int, w: Weight) -> Fraction:
    """Exact phase <w, a>/m reduced into [0, 1); additive in w modulo 1."""
    if m < 1:
        raise ValueError("level must be a positive integer")
    return (inner_product(rs, w, a) / m) % 1


def denominator_profile(rs: RootSystem, a: Weight, m: int) -> DenominatorProfile:
    """D_a = lcm over fundamental weights of the phase denominators at level m."""
    denoms = []
    for i in range(rs.rank):
        omega = tuple(1 if j == i else 0 for j in range(rs.rank))
        denoms.append(phi_phase(rs, a, m, omega).denominator)
    return DenominatorProfile(weight=a, lcm_denominator=lcm(*denoms))


def classify(profile: DenominatorProfile) -> tuple[int, int] | None:
    """(p, k) if D_a = p**k for a single prime, None if several primes divide D_a."""
    factors = _factorize(profile.lcm_denominator)
    if len(factors) == 1:
        [(p, k)] = factors.items()
        return p, k
    return None


def completion_profile(rs: RootSystem, m: int) -> CompletionProfile:
    """Classify every level-m regular weight and tally copies of Z_p per prime."""
    regular = enumerate_regular_weights(rs, m)
    counts: dict[int, int] = {}
    unclassified = 0
    for a in regular:
        pk = classify(denominator_profile(rs, a, m))
        if pk is None:
            unclassified += 1
        else:
            counts[pk[0]] = counts.get(pk[0], 0) + 1

    bound = rs.gram_denominator * m
    for p in counts:
        if bound % p != 0:
            raise InvariantViolation(
                f"prime {p} appears in the completion profile of {rs.lie_type} at level {m} "
                f"but does not divide the denominator bound {bound}"
            )
    assert sum(counts.values()) + unclassified == len(regular)
    return CompletionProfile(
        lie_type=rs.lie_type,
        level=m,
        counts={p: counts[p] for p in sorted(counts)},
        regular_total=len(regular),
        unclassified=unclassified,
    )


def candidate_primes(rs: RootSystem, m: int) -> tuple[int, ...]:
    """Primes that can divide any D_a at level m: the primes of (gram denominator lcm) * m."""
    if m < 1:
        raise ValueError("level must be a positive integer")
    return tuple(sorted(_factorize(rs.gram_denominator * m)))


def _factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (denominators here stay desk-sized)."""
    if n < 1:
        raise ValueError("can only factor positive integers")
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors
