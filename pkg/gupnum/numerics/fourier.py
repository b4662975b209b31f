"""Position-space amplitudes of momentum states.

Psi(x) = (2 pi hbar)^(-1/2) * integral of exp(i p x / hbar) psi(p) dp.

In linearized mode the eigenstate phase xi arctan(sqrt(beta) p) / (hbar sqrt(beta))
is replaced by xi p / hbar, so the transform of a closed form becomes the
transform of its envelope evaluated at x - xi.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable

import numpy as np
from scipy.integrate import trapezoid

from gupnum.errors import DomainError, ProfileDomainError
from gupnum.models.fourier import PhaseMode
from gupnum.models.params import ModelParams
from gupnum.models.quadrature import IntegralResult, QuadratureConfig
from gupnum.models.states import Gaussian, GridState, KmmEigen, MaxLoc, SymEigen
from gupnum.numerics.bessel import bessel_k0
from gupnum.numerics.quadrature import integrate_fourier, integrate_interval
from gupnum.numerics.states import envelope, evaluate

logger = logging.getLogger(__name__)

# Closest approach to a log singularity, in units of hbar sqrt(beta).
MIN_OFFSET = 0.05
PLANCHEREL_HALF_WIDTH = 30.0
PLANCHEREL_COUNT = 4001
# Gaussians are integrated on the adaptive engine out to |p0| + GAUSSIAN_REACH sigma.
GAUSSIAN_REACH = 12.0


def singular_point(state, mode: PhaseMode) -> float | None:
    """Where the eigenstate profile diverges, or None for profiles finite everywhere.

    The exact phase tends to a constant at large |p|, leaving a 1/|p| tail
    whose transform diverges at x = 0; the linearized transform diverges at xi.
    """
    if not isinstance(state, SymEigen):
        return None
    return 0.0 if mode is PhaseMode.exact else state.xi


def position_amplitude(
    state, mode: PhaseMode, params: ModelParams, x: float, cfg: QuadratureConfig
) -> IntegralResult:
    """Numerical Fourier transform of ``state`` at position x.

    Gaussians and sampled states carry no eigenstate phase, so ``mode`` has
    no effect on them.

    Raises:
        ProfileDomainError: x lies within MIN_OFFSET hbar sqrt(beta) of the
            singular point.
        DomainError: the state does not decay (KMM eigenstate).
    """
    if isinstance(state, KmmEigen):
        raise DomainError("KMM eigenstates have constant modulus and no position-space transform")
    singular = singular_point(state, mode)
    if singular is not None and abs(x - singular) < MIN_OFFSET * params.length_scale:
        raise ProfileDomainError(x, singular, MIN_OFFSET * params.length_scale)

    prefactor = 1.0 / math.sqrt(2.0 * math.pi * params.hbar)
    if isinstance(state, GridState):
        omega = x / params.hbar
        lo, hi = state.support
        result = integrate_interval(
            lambda p: np.exp(1j * p * omega) * evaluate(state, params, p),
            lo,
            hi,
            cfg.with_hint(abs(omega)),
        )
    elif isinstance(state, (SymEigen, MaxLoc)) and mode is PhaseMode.linearized:
        result = integrate_fourier(
            lambda p: envelope(state, params, p), (x - state.xi) / params.hbar, params, cfg
        )
    else:
        bulk = abs(state.p0) + GAUSSIAN_REACH * state.sigma if isinstance(state, Gaussian) else 0.0
        result = integrate_fourier(lambda p: evaluate(state, params, p), x / params.hbar, params, cfg, bulk=bulk)
    return result.scaled(prefactor)


def eigen_position_closed_form(xi: float, x: float, params: ModelParams) -> float:
    """sqrt(2) / (beta^(1/4) pi sqrt(hbar)) K0(|x - xi| / (hbar sqrt(beta))).

    Raises:
        DomainError: x = xi, where the profile diverges logarithmically.
    """
    if x == xi:
        raise DomainError("the eigenstate profile diverges logarithmically at x = xi")
    scale = math.sqrt(2.0) / (params.beta**0.25 * math.pi * math.sqrt(params.hbar))
    return scale * bessel_k0(abs(x - xi) / params.length_scale)


def ml_position_closed_form(xi: float, x: float, params: ModelParams) -> float:
    """beta^(-1/4) hbar^(-1/2) exp(-|x - xi| / (hbar sqrt(beta)))."""
    return math.exp(-abs(x - xi) / params.length_scale) / (params.beta**0.25 * math.sqrt(params.hbar))


def closed_form(state, x: float, params: ModelParams) -> float | None:
    """Closed-form profile of a SymEigen or MaxLoc state, None for other states."""
    if isinstance(state, SymEigen):
        return eigen_position_closed_form(state.xi, x, params)
    if isinstance(state, MaxLoc):
        return ml_position_closed_form(state.xi, x, params)
    return None


def position_profile(
    state, mode: PhaseMode, params: ModelParams, xs: Iterable[float], cfg: QuadratureConfig
) -> list[tuple[float, IntegralResult]]:
    """(x, Psi(x)) for each requested x, in increasing x."""
    return [(x, position_amplitude(state, mode, params, x, cfg)) for x in sorted(xs)]


def plancherel_norm(
    state,
    mode: PhaseMode,
    params: ModelParams,
    cfg: QuadratureConfig,
    half_width: float = PLANCHEREL_HALF_WIDTH,
    count: int = PLANCHEREL_COUNT,
) -> float:
    """Trapezoid of |Psi(x)|^2 over xi +- half_width hbar sqrt(beta).

    For MaxLoc the truncated tail is about exp(-2 half_width); the kink at
    x = xi leaves a trapezoid error near h^2 / 3 in units of hbar sqrt(beta).
    """
    center = getattr(state, "xi", 0.0)
    width = half_width * params.length_scale
    xs = np.linspace(center - width, center + width, count)
    density = np.array([abs(position_amplitude(state, mode, params, float(x), cfg).value) ** 2 for x in xs])
    norm = float(trapezoid(density, xs))
    logger.info("plancherel norm %.12g on %d points over +-%g", norm, count, width)
    return norm


def linearization_gap(
    state, params: ModelParams, xs: Iterable[float], cfg: QuadratureConfig
) -> list[tuple[float, complex, complex, float]]:
    """(x, exact, linearized, |exact - linearized|) for each x, in increasing x."""
    rows = []
    for x in sorted(xs):
        exact = position_amplitude(state, PhaseMode.exact, params, x, cfg).value
        linear = position_amplitude(state, PhaseMode.linearized, params, x, cfg).value
        rows.append((x, exact, linear, abs(exact - linear)))
    return rows
