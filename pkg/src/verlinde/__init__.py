"""Exact completion profiles of level-m Verlinde algebras.

Two independent computations of the multiplicities N(type, m, p): an oracle
that enumerates the regular weights of the level-m alcove and classifies
the denominators of their evaluation phases, and nine closed per-type
counting procedures.  Everything is exact rational arithmetic.
"""

from .alcove import RegularWeightSet, count_regular_weights, enumerate_regular_weights
from .completion import (
    CompletionProfile,
    DenominatorProfile,
    InvariantViolation,
    candidate_primes,
    classify,
    completion_profile,
    denominator_profile,
    phi_phase,
)
from .counters import LevelDecomposition, count, decompose_level
from .crosscheck import CrossCheckEntry, CrossCheckReport, RunConfig, run_crosscheck
from .root_systems import (
    LieType,
    RootSystem,
    ValidationReport,
    all_types,
    build_root_system,
    inner_product,
    theta_level,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "CompletionProfile",
    "CrossCheckEntry",
    "CrossCheckReport",
    "DenominatorProfile",
    "InvariantViolation",
    "LevelDecomposition",
    "LieType",
    "RegularWeightSet",
    "RootSystem",
    "RunConfig",
    "ValidationReport",
    "all_types",
    "build_root_system",
    "candidate_primes",
    "classify",
    "completion_profile",
    "count",
    "count_regular_weights",
    "decompose_level",
    "denominator_profile",
    "enumerate_regular_weights",
    "inner_product",
    "phi_phase",
    "run_crosscheck",
    "theta_level",
    "validate",
    "__version__",
]
