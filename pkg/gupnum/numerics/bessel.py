"""Modified Bessel function of the second kind, order zero."""

from __future__ import annotations

import math

import numpy as np

from gupnum.errors import DomainError
from gupnum.models.quadrature import IntegralResult, QuadratureConfig
from gupnum.numerics.quadrature import integrate_interval

EULER_GAMMA = 0.57721566490153286061
_SERIES_LIMIT = 2.0
_EPS = 1e-16
_MAX_TERMS = 10000


def bessel_k0(x: float) -> float:
    """K0(x) for x > 0.

    Ascending series for x <= 2, Temme's continued fraction (Steed's
    algorithm) above.

    Raises:
        DomainError: x <= 0, where K0 diverges logarithmically.
    """
    if not x > 0:
        raise DomainError(f"K0 is defined for x > 0 only (got {x!r})")
    if x <= _SERIES_LIMIT:
        return _k0_series(x)
    return _k0_continued_fraction(x)


def _k0_series(x: float) -> float:
    # K0 = -(ln(x/2) + gamma) I0(x) + sum_k (x^2/4)^k / (k!)^2 H_k
    y = 0.25 * x * x
    term = 1.0
    i0 = 1.0
    harmonic_sum = 0.0
    harmonic = 0.0
    k = 0
    while True:
        k += 1
        term *= y / (k * k)
        harmonic += 1.0 / k
        i0 += term
        harmonic_sum += term * harmonic
        if term * max(harmonic, 1.0) < _EPS * abs(harmonic_sum + i0):
            break
    return -(math.log(0.5 * x) + EULER_GAMMA) * i0 + harmonic_sum


def _k0_continued_fraction(x: float) -> float:
    b = 2.0 * (1.0 + x)
    d = 1.0 / b
    delh = d
    q1, q2 = 0.0, 1.0
    a1 = 0.25
    q = c = a1
    a = -a1
    s = 1.0 + q * delh
    for i in range(2, _MAX_TERMS):
        a -= 2 * (i - 1)
        c = -a * c / i
        qnew = (q1 - b * q2) / a
        q1, q2 = q2, qnew
        q += c * qnew
        b += 2.0
        d = 1.0 / (b + a * d)
        delh = (b * d - 1.0) * delh
        dels = q * delh
        s += dels
        if abs(dels / s) < _EPS:
            break
    return math.sqrt(math.pi / (2.0 * x)) * math.exp(-x) / s


def bessel_k0_integral(x: float, cfg: QuadratureConfig | None = None) -> IntegralResult:
    """K0(x) from its integral representation, the integral of exp(-x cosh t) over t >= 0.

    The range is cut where exp(-x cosh t) underflows.
    """
    if not x > 0:
        raise DomainError(f"K0 is defined for x > 0 only (got {x!r})")
    cfg = cfg or QuadratureConfig()
    upper = math.acosh(max(1.0, 745.0 / x))
    return integrate_interval(lambda t: np.exp(-x * np.cosh(t)), 0.0, upper, cfg)
