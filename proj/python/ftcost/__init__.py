"""Physical-qubit cost of concatenated fault-tolerant schemes.

Exact counts come back as ``int``; exact non-integers as ``fractions.Fraction``.
"""

from ._core import (
    ConfigSemanticError,
    ConfigSyntaxError,
    DimensionError,
    DomainError,
    Error,
    RegimeError,
    asymptotic_ratio,
    cost_matrix,
    estimate,
    exact_shared_tail,
    failure_multiplicity_independent,
    failure_multiplicity_shared,
    flag_ratio,
    iterate,
    logical_error,
    mc_lack_frequency,
    phase,
    required_level,
    shared_spares,
    toy_cost_per_logical,
    toy_ratio,
)

__all__ = [
    "ConfigSemanticError",
    "ConfigSyntaxError",
    "DimensionError",
    "DomainError",
    "Error",
    "RegimeError",
    "asymptotic_ratio",
    "cost_matrix",
    "estimate",
    "exact_shared_tail",
    "failure_multiplicity_independent",
    "failure_multiplicity_shared",
    "flag_ratio",
    "iterate",
    "logical_error",
    "mc_lack_frequency",
    "phase",
    "required_level",
    "shared_spares",
    "toy_cost_per_logical",
    "toy_ratio",
]
