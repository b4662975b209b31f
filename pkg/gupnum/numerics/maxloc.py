"""Maximally localized states: overlaps, span sums and the defining equation.

Closed forms here are checked against direct quadrature of the defining
integrals, which is the reference value wherever the two disagree.
"""

from __future__ import annotations

import math

import numpy as np

from gupnum.errors import DomainError
from gupnum.models.operators import OperatorSpec
from gupnum.models.params import Measure, ModelParams
from gupnum.models.quadrature import IntegralResult, QuadratureConfig
from gupnum.models.states import MaxLoc, SymEigen
from gupnum.numerics.eigenbasis import reduced_offset
from gupnum.numerics.operators import apply
from gupnum.numerics.quadrature import inner_product
from gupnum.numerics.states import evaluate

SWITCHOVER = 1e-6
_SQRT8 = 2.0 * math.sqrt(2.0)


def ml_overlap_analytic(xi: float, xi_prime: float, params: ModelParams) -> float:
    """<ML_xi|ML_xi'> = sin(pi x) / (pi (x - x^3)), x = (xi' - xi) / (2 hbar sqrt(beta)).

    The limits are 1 at x = 0 and 1/2 at x = +-1.
    """
    x = abs(xi_prime - xi) / (2.0 * params.length_scale)
    if x < SWITCHOVER:
        return 1.0 + x * x * (1.0 - math.pi**2 / 6.0)
    delta = x - 1.0
    if abs(delta) < SWITCHOVER:
        return 0.5 * (1.0 - 1.5 * delta)
    return math.sin(math.pi * x) / (math.pi * (x - x**3))


def ml_eigen_overlap_analytic(xi_eigen: float, xi_ml: float, params: ModelParams) -> float:
    """<psi_xi'|ML_xi> = 2 sqrt(2) cos(k pi / 2) / (pi (1 - k^2)), k = (xi - xi') / (hbar sqrt(beta)).

    At k = +-1 numerator and denominator vanish together; the limit is sqrt(2)/2.
    """
    k = abs(xi_ml - xi_eigen) / params.length_scale
    delta = k - 1.0
    if abs(delta) < SWITCHOVER:
        return 0.5 * math.sqrt(2.0) * (1.0 - 0.5 * delta)
    return _SQRT8 * math.cos(0.5 * math.pi * k) / (math.pi * (1.0 - k * k))


def lattice_closed_form(m: int) -> float:
    """Lattice-form prediction 2 sqrt(2) cos(m pi) / (pi (4 m^2 - 1)) for separation m.

    Opposite in sign to ml_eigen_overlap_analytic at every m; kept for the
    sign comparison in the overlap report.
    """
    return _SQRT8 * math.cos(m * math.pi) / (math.pi * (4 * m * m - 1))


def ml_overlap_quadrature(xi: float, xi_prime: float, params: ModelParams, cfg: QuadratureConfig) -> IntegralResult:
    hint = abs(xi_prime - xi) / params.length_scale
    return inner_product(MaxLoc(xi=xi), MaxLoc(xi=xi_prime), Measure.standard, params, cfg.with_hint(hint))


def ml_eigen_overlap_quadrature(
    xi_eigen: float, xi_ml: float, params: ModelParams, cfg: QuadratureConfig
) -> IntegralResult:
    hint = abs(xi_ml - xi_eigen) / params.length_scale
    return inner_product(SymEigen(xi=xi_eigen), MaxLoc(xi=xi_ml), Measure.standard, params, cfg.with_hint(hint))


def _ordered_indices(N: int):
    yield 0
    for k in range(1, N + 1):
        yield -k
        yield k


def ml_span_sum(N: int) -> float:
    """Sum over |m| <= N of 8 / (pi^2 (4 m^2 - 1)^2); tends to 1 with an O(1/N^3) tail."""
    if N < 0:
        raise DomainError("truncation N must be non-negative")
    total = 0.0
    for m in _ordered_indices(N):
        total += 8.0 / (math.pi**2 * (4 * m * m - 1) ** 2)
    return total


def ml_parseval_sum(target_xi: float, N: int, params: ModelParams) -> float:
    """Sum over |m| <= N of |<psi_{2 n hbar sqrt(beta)}|ML_xi>|^2 for any xi."""
    if N < 0:
        raise DomainError("truncation N must be non-negative")
    epsilon = reduced_offset(target_xi, params)
    total = 0.0
    for m in _ordered_indices(N):
        k = 2 * m + epsilon
        total += ml_eigen_overlap_analytic(0.0, k * params.length_scale, params) ** 2
    return total


def ml_ode_residual(xi: float, p, params: ModelParams, delta_p: float | None = None):
    """[X_sym - xi + i hbar (1 + beta dp^2) / (2 dp^2) p] ML_xi(p) with <p> = 0.

    ``delta_p`` defaults to 1/sqrt(beta), the minimal-length configuration in
    which ML_xi solves the equation exactly.
    """
    dp = params.momentum_scale if delta_p is None else delta_p
    state = MaxLoc(xi=xi)
    q = np.asarray(p, dtype=float)
    psi = evaluate(state, params, q)
    x_sym = apply(OperatorSpec.x_sym, state, params, q)
    damping = 1j * params.hbar * (1.0 + params.beta * dp * dp) / (2.0 * dp * dp) * q * psi
    result = x_sym - xi * psi + damping
    return complex(result) if np.ndim(p) == 0 else result
