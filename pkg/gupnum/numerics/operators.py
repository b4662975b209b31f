"""Position and momentum operators, symmetry defects and the GUP bound.

X_sym acts as i hbar [(1 + beta p^2) d/dp + beta p], X_KMM as
i hbar (1 + beta p^2) d/dp, and P, P^2, 1 + beta P^2 by multiplication.
"""

from __future__ import annotations

import logging
import math

import numpy as np

from gupnum.errors import (
    DivergentMomentError,
    NonNormalizableStateError,
    QuadratureError,
)
from gupnum.models.operators import OperatorSpec, UncertaintyReport
from gupnum.models.params import Measure, ModelParams
from gupnum.models.quadrature import IntegralResult, QuadratureConfig
from gupnum.numerics.quadrature import common_support, overlap
from gupnum.numerics.states import evaluate, evaluate_derivative

logger = logging.getLogger(__name__)


def apply_profile(op: OperatorSpec, value, derivative, params: ModelParams, p):
    """Operator action on a function given by its values and p-derivatives at p."""
    q = np.asarray(p, dtype=float)
    stretch = 1.0 + params.beta * q * q
    if op is OperatorSpec.x_sym:
        return 1j * params.hbar * (stretch * derivative + params.beta * q * value)
    if op is OperatorSpec.x_kmm:
        return 1j * params.hbar * stretch * derivative
    if op is OperatorSpec.p:
        return q * value
    if op is OperatorSpec.p_squared:
        return q * q * value
    if op is OperatorSpec.one_beta_p2:
        return stretch * value
    raise ValueError(f"unknown operator {op!r}")


def apply(op: OperatorSpec, state, params: ModelParams, p):
    """(O psi)(p) from evaluate / evaluate_derivative."""
    value = evaluate(state, params, p)
    if op in (OperatorSpec.x_sym, OperatorSpec.x_kmm):
        derivative = evaluate_derivative(state, params, p)
    else:
        derivative = None
    result = apply_profile(op, value, derivative, params, p)
    return complex(result) if np.ndim(p) == 0 else result


def commutator_residual(state, params: ModelParams, p, op: OperatorSpec = OperatorSpec.x_sym):
    """([X, p] psi)(p) - i hbar (1 + beta p^2) psi(p) for X = X_sym or X_KMM."""
    q = np.asarray(p, dtype=float)
    psi = evaluate(state, params, q)
    dpsi = evaluate_derivative(state, params, q)
    # X (p psi) needs d/dp (p psi) = psi + p psi'.
    x_of_p_psi = apply_profile(op, q * psi, psi + q * dpsi, params, q)
    p_of_x_psi = q * apply_profile(op, psi, dpsi, params, q)
    result = x_of_p_psi - p_of_x_psi - 1j * params.hbar * (1.0 + params.beta * q * q) * psi
    return complex(result) if np.ndim(p) == 0 else result


def _action(op: OperatorSpec, state, params: ModelParams):
    return lambda p: apply(op, state, params, p)


def matrix_element(
    psi, op: OperatorSpec, phi, measure: Measure, params: ModelParams, cfg: QuadratureConfig
) -> IntegralResult:
    """<psi|O phi> under ``measure``."""
    return overlap(
        lambda p: evaluate(psi, params, p),
        _action(op, phi, params),
        measure,
        params,
        cfg,
        common_support(psi, phi),
    )


def momentum_matrix_element(psi, phi, params: ModelParams, cfg: QuadratureConfig) -> IntegralResult:
    """<psi|p|phi> under the standard measure."""
    return matrix_element(psi, OperatorSpec.p, phi, Measure.standard, params, cfg)


def symmetry_defect(
    op: OperatorSpec, measure: Measure, psi, phi, params: ModelParams, cfg: QuadratureConfig
) -> IntegralResult:
    """<psi|O phi> - <O psi|phi> under ``measure``.

    Vanishes for (X_sym, standard), (X_KMM, KMM) and the multiplication
    operators; for (X_KMM, standard) integration by parts leaves
    -2 i hbar beta <psi|p|phi>.
    """
    bounds = common_support(psi, phi)
    forward = matrix_element(psi, op, phi, measure, params, cfg)
    backward = overlap(
        _action(op, psi, params),
        lambda p: evaluate(phi, params, p),
        measure,
        params,
        cfg,
        bounds,
    )
    return forward - backward


def kmm_defect_prediction(psi, phi, params: ModelParams, cfg: QuadratureConfig) -> IntegralResult:
    """-2 i hbar beta <psi|p|phi>, the standard-measure defect of X_KMM."""
    return momentum_matrix_element(psi, phi, params, cfg).scaled(-2j * params.hbar * params.beta)


def min_position_uncertainty(delta_p: float, params: ModelParams) -> float:
    """(hbar/2)(1/dp + beta dp): smallest Delta X allowed at momentum spread dp."""
    return 0.5 * params.hbar * (1.0 / delta_p + params.beta * delta_p)


def gup_check(state, params: ModelParams, cfg: QuadratureConfig) -> UncertaintyReport:
    """Moments of ``state`` under X_sym and p, and both sides of the GUP bound.

    <X^2> is taken as ||(X - <X>) psi||^2, which relies on X_sym being
    symmetric on the state.

    Raises:
        NonNormalizableStateError: the norm integral diverges.
        DivergentMomentError: a moment integral diverges (named in the error).
    """
    bounds = common_support(state)

    def psi(p):
        return evaluate(state, params, p)

    def moment(name: str, fa, fb) -> IntegralResult:
        try:
            return overlap(fa, fb, Measure.standard, params, cfg, bounds)
        except QuadratureError as exc:
            raise DivergentMomentError(name, exc) from exc

    try:
        norm = overlap(psi, psi, Measure.standard, params, cfg, bounds)
    except QuadratureError as exc:
        raise NonNormalizableStateError(f"state has no finite norm: {exc.reason}") from exc
    n = norm.real

    def p_psi(p):
        return apply(OperatorSpec.p, state, params, p)

    def x_psi(p):
        return apply(OperatorSpec.x_sym, state, params, p)

    mean_p_result = moment("p", psi, p_psi)
    mean_p2_result = moment("p^2", p_psi, p_psi)
    mean_x_result = moment("X", psi, x_psi)
    mean_p = mean_p_result.real / n
    mean_p2 = mean_p2_result.real / n
    mean_x = mean_x_result.real / n

    def centered_p(p):
        return p_psi(p) - mean_p * psi(p)

    def centered_x(p):
        return x_psi(p) - mean_x * psi(p)

    var_p = moment("(p - <p>)^2", centered_p, centered_p)
    var_x = moment("(X - <X>)^2", centered_x, centered_x)
    delta_p = math.sqrt(max(var_p.real / n, 0.0))
    delta_x = math.sqrt(max(var_x.real / n, 0.0))

    results = (norm, mean_p_result, mean_p2_result, mean_x_result, var_p, var_x)
    report = UncertaintyReport(
        mean_X=mean_x,
        mean_p=mean_p,
        mean_p2=mean_p2,
        delta_X=delta_x,
        delta_p=delta_p,
        lhs=delta_x * delta_p,
        rhs=0.5 * params.hbar * (1.0 + params.beta * mean_p2),
        floor=0.5 * params.hbar * (1.0 + params.beta * delta_p * delta_p),
        error_estimate=max(r.error_estimate for r in results),
    )
    logger.debug("gup check %r: %s", state, report)
    return report
