"""Python interface to the polymaass C++ core.

Exact rationals cross the boundary as decimal strings and are rebuilt here as
fractions.Fraction, so no precision is lost.
"""

from fractions import Fraction

from ._polymaass import (  # noqa: F401
    PolymaassError,
    discriminant_delta,
    dim_cusp,
    dim_holomorphic,
    dim_polyharmonic,
    divisor_sum,
    eval,
    eval_lattice,
    explicit_g1_series,
    gamma,
    holomorphic_eisenstein,
    identity_registry,
    incomplete_gamma_upper,
    kronecker_limit_value,
    reduce,
    taylor_coefficient,
    verify_identity,
    whittaker_w,
    zeta,
    zeta_hat,
)
from . import _polymaass as _core


def bernoulli(n):
    """Exact Bernoulli number B_n as a Fraction."""
    num, den = _core.bernoulli(n)
    return Fraction(int(num), int(den))


def solve_table(weight, boundary, n_max):
    """Connection-coefficient table as rows of Fractions (l = 0..n+1)."""
    rows = _core.solve_table(weight, boundary, n_max)
    return [[Fraction(int(num), int(den)) for num, den in row] for row in rows]


def closed_form_binomial(n, k, l):
    num, den = _core.closed_form_binomial(n, k, l)
    return Fraction(int(num), int(den))


__all__ = [
    "PolymaassError",
    "bernoulli",
    "closed_form_binomial",
    "dim_cusp",
    "dim_holomorphic",
    "dim_polyharmonic",
    "discriminant_delta",
    "divisor_sum",
    "eval",
    "eval_lattice",
    "explicit_g1_series",
    "gamma",
    "holomorphic_eisenstein",
    "identity_registry",
    "incomplete_gamma_upper",
    "kronecker_limit_value",
    "reduce",
    "solve_table",
    "taylor_coefficient",
    "verify_identity",
    "whittaker_w",
    "zeta",
    "zeta_hat",
]
