"""Digamma, Euler's constant and odd zeta values from rapidly convergent hyperbolic series."""

from ._rampsi import (
    DomainError,
    EvalParams,
    GuardBandError,
    ToleranceError,
    bernoulli,
    csch2_sum,
    double_series,
    gamma_any_x,
    gamma_at_integer,
    lambert_sum,
    plan,
    psi,
    psi_oracle,
    psi_prime,
    zeta_direct,
    zeta_even,
    zeta_odd,
)

__all__ = [
    "DomainError",
    "EvalParams",
    "GuardBandError",
    "ToleranceError",
    "bernoulli",
    "csch2_sum",
    "double_series",
    "gamma_any_x",
    "gamma_at_integer",
    "lambert_sum",
    "plan",
    "psi",
    "psi_oracle",
    "psi_prime",
    "zeta_direct",
    "zeta_even",
    "zeta_odd",
]
