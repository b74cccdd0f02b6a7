"""Oracle-vs-formula verification sweeps.

For every grid point (type, level, prime) the alcove oracle (denominator
classification of the actual regular weights) and the closed counting
procedure must produce the same multiplicity.  E_6 rows at p != 3 depend on
the configured lattice reading and are marked reading_sensitive so a
mismatch under the alternate reading is documented rather than silent.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import counters
from .completion import candidate_primes, completion_profile
from .root_systems import LieType, build_root_system


@dataclass(frozen=True)
class RunConfig:
    types: tuple[LieType, ...]
    level_min: int
    level_max: int
    primes: tuple[int, ...] | None = None  # None: candidate primes per grid point
    reading: str = "literal"

    def __post_init__(self):
        if not self.types:
            raise ValueError("config needs at least one type")
        if self.level_min < 1 or self.level_max < self.level_min:
            raise ValueError(f"empty level range [{self.level_min}, {self.level_max}]")
        if self.primes is not None:
            for p in self.primes:
                if not _is_prime(p):
                    raise ValueError(f"explicit prime list contains non-prime {p}")
        if self.reading not in counters.READINGS:
            raise ValueError(f"unknown reading {self.reading!r}")

    def levels(self) -> range:
        return range(self.level_min, self.level_max + 1)


@dataclass(frozen=True)
class CrossCheckEntry:
    lie_type: LieType
    level: int
    prime: int
    oracle_count: int
    formula_count: int
    reading_sensitive: bool

    @property
    def match(self) -> bool:
        return self.oracle_count == self.formula_count


@dataclass(frozen=True)
class CrossCheckReport:
    config: RunConfig
    entries: tuple[CrossCheckEntry, ...] = field(default_factory=tuple)

    @property
    def mismatches(self) -> tuple[CrossCheckEntry, ...]:
        return tuple(e for e in self.entries if not e.match)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def run_crosscheck(config: RunConfig) -> CrossCheckReport:
    entries = []
    for lie_type in config.types:
        rs = build_root_system(lie_type)
        for m in config.levels():
            oracle = completion_profile(rs, m)
            if config.primes is None:
                primes = sorted(set(candidate_primes(rs, m)) | set(oracle.counts))
            else:
                primes = sorted(config.primes)
            for p in primes:
                entries.append(CrossCheckEntry(
                    lie_type=lie_type,
                    level=m,
                    prime=p,
                    oracle_count=oracle.counts.get(p, 0),
                    formula_count=counters.count(lie_type, m, p, config.reading),
                    reading_sensitive=(lie_type == LieType("E", 6) and p != 3),
                ))
    return CrossCheckReport(config=config, entries=tuple(entries))


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1 if d == 2 else 2
    return True
