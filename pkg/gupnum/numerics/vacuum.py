"""Zero-point energy density of a free scalar field, with and without the GUP measure.

rho = (1 / (2 pi)^3) 4 pi * integral of (1/2) sqrt(p^2 + m^2) p^2 w(p) dp,
with w = (1 + beta p^2)^-3 for the modified measure and w = 1 otherwise.
The solid angle is done analytically.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence

import numpy as np

from gupnum.errors import DivergentIntegralError, DomainError
from gupnum.models.params import ModelParams
from gupnum.models.quadrature import IntegralResult, QuadratureConfig
from gupnum.models.vacuum import DivergenceScan, ScanPoint, VacuumParams
from gupnum.numerics.quadrature import integrate_half_line, integrate_interval

logger = logging.getLogger(__name__)

_PREFACTOR = 1.0 / (4.0 * math.pi**2)


def _integrand(vp: VacuumParams, modified: bool):
    beta = vp.params.beta
    m2 = vp.mass * vp.mass

    def f(p):
        q = np.asarray(p, dtype=float)
        value = np.sqrt(q * q + m2) * q * q
        if modified:
            value = value / (1.0 + beta * q * q) ** 3
        return value

    return f


def vacuum_energy_density(vp: VacuumParams, modified: bool, cfg: QuadratureConfig) -> IntegralResult:
    """Energy density up to vp.cutoff, or over all momenta for the modified measure.

    Raises:
        DivergentIntegralError: unmodified measure without a cutoff.
    """
    f = _integrand(vp, modified)
    if vp.cutoff is None:
        if not modified:
            raise DivergentIntegralError("divergent integral: the unmodified density needs a cutoff")
        result = integrate_half_line(f, vp.params, cfg)
    else:
        result = integrate_interval(f, 0.0, vp.cutoff, cfg)
    return result.scaled(_PREFACTOR)


def divergence_scan(
    vp: VacuumParams, cutoffs: Sequence[float], cfg: QuadratureConfig, modified: bool = False
) -> DivergenceScan:
    """Densities at each cutoff and the least-squares slope of log rho against log Lambda."""
    values = sorted(float(c) for c in cutoffs)
    if len(values) < 4:
        raise DomainError("a divergence scan needs at least four cutoffs")
    if values[0] <= 0 or values[-1] / values[0] < 100.0:
        raise DomainError("cutoffs must be positive and span at least two decades")

    points = []
    for cutoff in values:
        result = vacuum_energy_density(vp.with_cutoff(cutoff), modified, cfg)
        points.append(ScanPoint(cutoff=cutoff, density=result.real, error_estimate=result.error_estimate))
    slope = float(
        np.polyfit(np.log([p.cutoff for p in points]), np.log([p.density for p in points]), 1)[0]
    )
    logger.info("divergence scan (modified=%s, m=%g): slope %.9g", modified, vp.mass, slope)
    return DivergenceScan(points=points, slope=slope, modified=modified)


def massless_modified_density(params: ModelParams) -> float:
    """1 / (16 pi^2 beta^2)."""
    return 1.0 / (16.0 * math.pi**2 * params.beta**2)


def planck_cutoff_comparison(vp: VacuumParams, cfg: QuadratureConfig) -> tuple[IntegralResult, IntegralResult]:
    """(modified density over all momenta, unmodified density cut at 1/sqrt(beta))."""
    modified = vacuum_energy_density(vp.with_cutoff(None), True, cfg)
    unmodified = vacuum_energy_density(vp.with_cutoff(vp.params.momentum_scale), False, cfg)
    return modified, unmodified
