"""Adaptive Gauss-Kronrod integration and inner products under both measures.

Integrals over the momentum line go through the substitution
p = tan(t) / sqrt(beta), which compactifies the line to (-pi/2, pi/2) and
turns every eigenstate phase into a plane wave in t. Panels are 7/15-point
Gauss-Kronrod pairs, the panel error is |K15 - G7|, and the panel with the
largest error is bisected until the total error meets the tolerance.
Totals are summed in panel order so results do not depend on the bisection
history.
"""

from __future__ import annotations

import heapq
import logging
import math
from collections.abc import Callable

import numpy as np
from scipy import integrate

from gupnum.errors import QuadratureError
from gupnum.models.params import Measure, ModelParams
from gupnum.models.quadrature import IntegralResult, QuadratureConfig
from gupnum.numerics.states import evaluate, measure_weight, support

logger = logging.getLogger(__name__)

Integrand = Callable[[np.ndarray], np.ndarray]

# Kronrod abscissae (descending, last is the midpoint) and weights; every
# second abscissa, starting at index 1, is a Gauss node.
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

_NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
_KRONROD = np.concatenate([_WGK[:-1], _WGK[::-1]])
_GAUSS = np.zeros(15)
_GAUSS[[1, 3, 5]] = _WG[:3]
_GAUSS[7] = _WG[3]
_GAUSS[[13, 11, 9]] = _WG[:3]


def _panel(f: Integrand, a: float, b: float) -> tuple[complex, float]:
    center = 0.5 * (a + b)
    half = 0.5 * (b - a)
    values = np.asarray(f(center + half * _NODES), dtype=complex)
    if not np.all(np.isfinite(values)):
        raise QuadratureError(f"integrand not finite on panel [{a:.17g}, {b:.17g}]")
    kronrod = half * complex(np.dot(_KRONROD, values))
    gauss = half * complex(np.dot(_GAUSS, values))
    return kronrod, abs(kronrod - gauss)


def _ordered_sum(panels: dict[tuple[float, float], tuple[complex, float]]) -> tuple[complex, float]:
    ordered = [panels[key] for key in sorted(panels)]
    real = math.fsum(v.real for v, _ in ordered)
    imag = math.fsum(v.imag for v, _ in ordered)
    return complex(real, imag), math.fsum(e for _, e in ordered)


def integrate_interval(f: Integrand, a: float, b: float, cfg: QuadratureConfig) -> IntegralResult:
    """Adaptive integral of a vectorized integrand over the finite interval [a, b].

    With ``cfg.oscillation_hint`` = w the initial panels are no wider than pi / w.

    Raises:
        QuadratureError: the tolerance was not met within
            ``cfg.max_subdivisions`` panels; carries the best estimate.
    """
    if b < a:
        return integrate_interval(f, b, a, cfg).scaled(-1.0)
    if a == b:
        return IntegralResult(value=0j, error_estimate=0.0, evaluations=0)

    initial = 1
    if cfg.oscillation_hint:
        initial = max(1, math.ceil((b - a) * cfg.oscillation_hint / math.pi))
    initial = min(initial, cfg.max_subdivisions)
    edges = np.linspace(a, b, initial + 1)

    panels: dict[tuple[float, float], tuple[complex, float]] = {}
    heap: list[tuple[float, float, float]] = []
    total, error = 0j, 0.0
    for left, right in zip(edges[:-1], edges[1:]):
        value, err = _panel(f, float(left), float(right))
        panels[(float(left), float(right))] = (value, err)
        heapq.heappush(heap, (-err, float(left), float(right)))
        total += value
        error += err
    evaluations = 15 * initial

    while error > cfg.tolerance(total):
        if len(panels) >= cfg.max_subdivisions:
            value, err = _ordered_sum(panels)
            best = IntegralResult(value=value, error_estimate=err, evaluations=evaluations)
            raise QuadratureError(f"no convergence within {cfg.max_subdivisions} panels", best)
        _, left, right = heapq.heappop(heap)
        mid = 0.5 * (left + right)
        if not left < mid < right:
            value, err = _ordered_sum(panels)
            best = IntegralResult(value=value, error_estimate=err, evaluations=evaluations)
            raise QuadratureError(f"panel near {left:.17g} below floating-point resolution", best)
        old_value, old_err = panels.pop((left, right))
        lower = _panel(f, left, mid)
        upper = _panel(f, mid, right)
        panels[(left, mid)] = lower
        panels[(mid, right)] = upper
        heapq.heappush(heap, (-lower[1], left, mid))
        heapq.heappush(heap, (-upper[1], mid, right))
        total += lower[0] + upper[0] - old_value
        error += lower[1] + upper[1] - old_err
        evaluations += 30

    value, err = _ordered_sum(panels)
    logger.debug("integrated [%g, %g] with %d panels, error %.3g", a, b, len(panels), err)
    return IntegralResult(value=value, error_estimate=err, evaluations=evaluations)


def _t_range(params: ModelParams, lo: float, hi: float) -> tuple[float, float]:
    lower = -math.pi / 2 if math.isinf(lo) else math.atan(params.sqrt_beta * lo)
    upper = math.pi / 2 if math.isinf(hi) else math.atan(params.sqrt_beta * hi)
    return lower, upper


def integrate_real_line(
    f: Integrand,
    params: ModelParams,
    cfg: QuadratureConfig,
    bounds: tuple[float, float] = (-math.inf, math.inf),
) -> IntegralResult:
    """Integral of f over the momentum line, or over finite ``bounds``.

    Works in t = arctan(sqrt(beta) p); the integrand becomes
    sec^2(t) f(tan(t) / sqrt(beta)) / sqrt(beta).
    """
    sqrt_beta = params.sqrt_beta

    def transformed(t: np.ndarray) -> np.ndarray:
        cos_t = np.cos(t)
        return f(np.tan(t) / sqrt_beta) / (cos_t * cos_t * sqrt_beta)

    lower, upper = _t_range(params, *bounds)
    return integrate_interval(transformed, lower, upper, cfg)


def integrate_half_line(f: Integrand, params: ModelParams, cfg: QuadratureConfig) -> IntegralResult:
    """Integral of f over p in [0, inf)."""
    return integrate_real_line(f, params, cfg, bounds=(0.0, math.inf))


def integrate_reference(
    f: Integrand, a: float, b: float, cfg: QuadratureConfig
) -> IntegralResult:
    """Independent integral through QUADPACK (scipy), real and imaginary parts separately.

    Infinite limits are allowed. Used as a cross-check of the adaptive engine.
    """
    value, error, evaluations = 0j, 0.0, 0
    for part, unit in ((np.real, 1.0), (np.imag, 1j)):
        result = integrate.quad(
            lambda x: float(part(f(np.asarray(x)))),
            a,
            b,
            epsabs=cfg.abs_tol,
            epsrel=cfg.rel_tol,
            limit=cfg.max_subdivisions,
            full_output=1,
        )
        if len(result) > 3:
            best = IntegralResult(value=value + unit * result[0], error_estimate=error + result[1])
            raise QuadratureError(f"reference quadrature failed: {result[3]}", best)
        value += unit * result[0]
        error += result[1]
        evaluations += result[2]["neval"]
    return IntegralResult(value=value, error_estimate=error, evaluations=evaluations)


def integrate_fourier(
    g: Integrand,
    omega: float,
    params: ModelParams,
    cfg: QuadratureConfig,
    bulk: float = 0.0,
) -> IntegralResult:
    """Integral of g(p) exp(i omega p) over the momentum line.

    The line is folded onto [0, inf). Up to ``bulk`` the folded integrand
    g(p) exp(i omega p) + g(-p) exp(-i omega p) goes to the adaptive engine;
    beyond it the even part is integrated against cos(omega p) and the odd
    part against sin(omega p) by QUADPACK's Fourier rule, which extrapolates
    over cycles and so tolerates tails decaying only like 1/p. Set ``bulk``
    to cover every feature of g away from the origin: the Fourier rule stops
    after a few cycles with no contribution.
    omega = 0 falls back to the non-oscillatory line integral.
    """
    if omega == 0.0:
        return integrate_real_line(g, params, cfg)

    value, error, evaluations = 0j, 0.0, 0
    if bulk > 0.0:
        head = integrate_interval(
            lambda p: g(p) * np.exp(1j * omega * p) + g(-p) * np.exp(-1j * omega * p),
            0.0,
            bulk,
            cfg.with_hint(abs(omega)),
        )
        value, error, evaluations = head.value, head.error_estimate, head.evaluations

    sign = 1.0 if omega > 0 else -1.0
    w = abs(omega)

    def even(p):
        return g(p) + g(-p)

    def odd(p):
        return g(p) - g(-p)

    parts = (
        (even, np.real, "cos", 1.0),
        (even, np.imag, "cos", 1j),
        (odd, np.real, "sin", 1j * sign),
        (odd, np.imag, "sin", -sign),
    )
    for fold, component, weight, factor in parts:
        result = integrate.quad(
            lambda p: float(component(fold(np.asarray(p)))),
            bulk,
            np.inf,
            weight=weight,
            wvar=w,
            epsabs=cfg.abs_tol,
            limlst=cfg.fourier_cycles,
            limit=cfg.max_subdivisions,
            full_output=1,
        )
        if len(result) > 3:
            # Roundoff flags are accepted when the error estimate still meets the tolerance.
            if result[1] > cfg.tolerance(result[0]):
                best = IntegralResult(value=value + factor * result[0], error_estimate=error + result[1])
                raise QuadratureError(f"Fourier quadrature failed: {result[3]}", best)
            logger.debug("Fourier rule warning accepted (error %.3g): %s", result[1], result[3])
        value += factor * result[0]
        error += result[1]
        evaluations += result[2].get("neval", 0)
    return IntegralResult(value=value, error_estimate=error, evaluations=evaluations)


def overlap(
    fa: Integrand,
    fb: Integrand,
    measure: Measure,
    params: ModelParams,
    cfg: QuadratureConfig,
    bounds: tuple[float, float] = (-math.inf, math.inf),
) -> IntegralResult:
    """Integral of conj(fa) fb w over the momentum line (or ``bounds``)."""

    def integrand(p: np.ndarray) -> np.ndarray:
        return np.conj(fa(p)) * fb(p) * measure_weight(measure, params, p)

    return integrate_real_line(integrand, params, cfg, bounds)


def common_support(*states) -> tuple[float, float]:
    lows, highs = zip(*(support(s) for s in states))
    return max(lows), min(highs)


def inner_product(a, b, measure: Measure, params: ModelParams, cfg: QuadratureConfig) -> IntegralResult:
    """<a|b> under the standard or the KMM measure.

    Raises:
        QuadratureError: the integral does not converge (e.g. a KMM eigenstate
            under the standard measure).
    """
    return overlap(
        lambda p: evaluate(a, params, p),
        lambda p: evaluate(b, params, p),
        measure,
        params,
        cfg,
        common_support(a, b),
    )
