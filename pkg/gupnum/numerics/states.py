"""Pointwise evaluation of momentum-space states and their p-derivatives.

Every closed form has the shape

    psi(p) = N * (1 + beta p^2)^(-s) * exp(-i xi arctan(sqrt(beta) p) / (hbar sqrt(beta)))

with s = 1/2 (symmetrized eigenstate), s = 1 (maximally localized) and
s = 0 (KMM eigenstate). Inputs may be floats or numpy arrays; the result
has the same shape and is complex.
"""

from __future__ import annotations

import math
from collections.abc import Callable

import numpy as np

from gupnum.errors import DerivativeUnavailableError, RangeError
from gupnum.models.params import Measure, ModelParams
from gupnum.models.states import Gaussian, GridState, KmmEigen, MaxLoc, SymEigen

# Decay exponent s of the closed forms.
_DECAY = {SymEigen: 0.5, MaxLoc: 1.0, KmmEigen: 0.0}
_VALUE_STENCIL = 4
_DERIVATIVE_STENCIL = 6


def _scalar_or_array(value: np.ndarray, p) -> complex | np.ndarray:
    return complex(value) if np.ndim(p) == 0 else value


def normalization(state, params: ModelParams) -> float:
    """Prefactor N of a closed-form state."""
    if isinstance(state, MaxLoc):
        return math.sqrt(2.0 * params.sqrt_beta / math.pi)
    return math.sqrt(params.sqrt_beta / math.pi)


def phase_angle(state, params: ModelParams, p: np.ndarray) -> np.ndarray:
    """xi * arctan(sqrt(beta) p) / (hbar sqrt(beta))."""
    return state.xi * np.arctan(params.sqrt_beta * p) / params.length_scale


def envelope(state, params: ModelParams, p: np.ndarray) -> np.ndarray:
    """Real, even modulus N (1 + beta p^2)^(-s) of a closed form."""
    s = _DECAY[type(state)]
    return normalization(state, params) * (1.0 + params.beta * p * p) ** (-s)


def envelope_derivative(state, params: ModelParams, p: np.ndarray) -> np.ndarray:
    s = _DECAY[type(state)]
    q = 1.0 + params.beta * p * p
    return -2.0 * s * params.beta * p * normalization(state, params) * q ** (-s - 1.0)


def evaluate(state, params: ModelParams, p):
    """Amplitude psi(p) of a state.

    Raises:
        RangeError: p lies outside the samples of a GridState.
    """
    q = np.asarray(p, dtype=float)
    if isinstance(state, (SymEigen, MaxLoc, KmmEigen)):
        value = envelope(state, params, q) * np.exp(-1j * phase_angle(state, params, q))
    elif isinstance(state, Gaussian):
        value = _gaussian(state, params, q)
    elif isinstance(state, GridState):
        value = _interpolate(state, q, derivative=False)
    else:
        raise TypeError(f"unsupported state {state!r}")
    return _scalar_or_array(value, p)


def evaluate_derivative(state, params: ModelParams, p):
    """Analytic d psi / dp for closed forms; local finite differences for grids.

    The grid derivative is that of the six-point Lagrange interpolant and is
    fifth-order accurate in the sample spacing.

    Raises:
        DerivativeUnavailableError: a GridState with fewer than six samples.
        RangeError: p lies outside the samples of a GridState.
    """
    q = np.asarray(p, dtype=float)
    if isinstance(state, (SymEigen, MaxLoc, KmmEigen)):
        phase = np.exp(-1j * phase_angle(state, params, q))
        dtheta = params.sqrt_beta / (1.0 + params.beta * q * q)
        kappa = state.xi / params.length_scale
        value = (
            envelope_derivative(state, params, q)
            - 1j * kappa * dtheta * envelope(state, params, q)
        ) * phase
    elif isinstance(state, Gaussian):
        value = _gaussian(state, params, q) * (
            -(q - state.p0) / state.sigma**2 - 1j * state.x0 / params.hbar
        )
    elif isinstance(state, GridState):
        value = _interpolate(state, q, derivative=True)
    else:
        raise TypeError(f"unsupported state {state!r}")
    return _scalar_or_array(value, p)


def measure_weight(measure: Measure, params: ModelParams, p):
    """Inner-product weight: 1 (standard) or (1 + beta p^2)^-1 (KMM)."""
    q = np.asarray(p, dtype=float)
    if measure is Measure.kmm:
        return 1.0 / (1.0 + params.beta * q * q)
    return np.ones_like(q)


def support(state) -> tuple[float, float]:
    if isinstance(state, GridState):
        return state.support
    return -math.inf, math.inf


def _gaussian(state: Gaussian, params: ModelParams, q: np.ndarray) -> np.ndarray:
    norm = (math.pi * state.sigma**2) ** -0.25
    return norm * np.exp(
        -((q - state.p0) ** 2) / (2.0 * state.sigma**2) - 1j * q * state.x0 / params.hbar
    )


def _interpolate(state: GridState, q: np.ndarray, derivative: bool) -> np.ndarray:
    ps, amps = state.momenta, state.amplitudes
    n = ps.size
    # Values use a cubic through four samples; derivatives differentiate a
    # quintic through six, which keeps their error at O(h^5).
    width = _DERIVATIVE_STENCIL if derivative else _VALUE_STENCIL
    if n < width:
        raise DerivativeUnavailableError(f"grid derivatives need at least {width} samples")
    flat = np.atleast_1d(q)
    if np.any(flat < ps[0]) or np.any(flat > ps[-1]):
        raise RangeError(
            f"momentum outside grid support [{ps[0]:g}, {ps[-1]:g}]; no extrapolation"
        )
    # Stencil centered on the interval [p[i], p[i+1]], clamped at the ends.
    i = np.searchsorted(ps, flat, side="right") - 1
    start = np.clip(i - (width // 2 - 1), 0, n - width)
    nodes = np.stack([ps[start + k] for k in range(width)])
    values = np.stack([amps[start + k] for k in range(width)])
    out = np.zeros(flat.shape, dtype=complex)
    for j in range(width):
        others = [k for k in range(width) if k != j]
        denom = np.prod([nodes[j] - nodes[k] for k in others], axis=0)
        if derivative:
            numer = np.zeros(flat.shape)
            for m in others:
                numer += np.prod([flat - nodes[k] for k in others if k != m], axis=0)
        else:
            numer = np.prod([flat - nodes[k] for k in others], axis=0)
        out += values[j] * numer / denom
    return out.reshape(q.shape)


def grid_state_from_function(
    fn: Callable[[np.ndarray], np.ndarray], p_min: float, p_max: float, count: int
) -> GridState:
    """Sample a vectorized amplitude on a uniform grid."""
    ps = np.linspace(p_min, p_max, count)
    amps = np.asarray(fn(ps), dtype=complex)
    return GridState(p=tuple(ps.tolist()), re=tuple(amps.real.tolist()), im=tuple(amps.imag.tolist()))


def odd_gaussian_grid(
    sigma: float = 1.0, half_width: float = 12.0, count: int = 24001
) -> GridState:
    """Normalized p * exp(-p^2 / (2 sigma^2)) sampled on [-half_width, half_width]."""
    norm = math.sqrt(2.0 / (math.sqrt(math.pi) * sigma**3))
    return grid_state_from_function(
        lambda p: norm * p * np.exp(-(p**2) / (2.0 * sigma**2)), -half_width, half_width, count
    )
