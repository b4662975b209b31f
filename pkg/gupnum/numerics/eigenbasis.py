"""Eigenstates of the symmetrized position operator.

Analytic overlaps, the xi_n lattice, Gram matrices, span sums and the
unitary map U f(t) = beta^(-1/4) sec(t) f(tan(t) / sqrt(beta)) onto
L2(-pi/2, pi/2).
"""

from __future__ import annotations

import logging
import math

import numpy as np

from gupnum.errors import DomainError, GramAssemblyError, QuadratureError
from gupnum.models.lattice import GramMatrix, LatticeSpec, StateFamily
from gupnum.models.params import Measure, ModelParams
from gupnum.models.quadrature import IntegralResult, QuadratureConfig
from gupnum.models.states import KmmEigen, MaxLoc, SymEigen
from gupnum.numerics.quadrature import inner_product, integrate_interval, integrate_reference
from gupnum.numerics.states import evaluate

logger = logging.getLogger(__name__)

COINCIDENCE = 1e-6
SPOT_CHECKS = 10

_FAMILY = {
    StateFamily.sym_eigen: SymEigen,
    StateFamily.maxloc: MaxLoc,
    StateFamily.kmm_eigen: KmmEigen,
}


def family_state(family: StateFamily, xi: float):
    return _FAMILY[family](xi=xi)


def reduced_offset(xi: float, params: ModelParams) -> float:
    """epsilon in [-1, 1] with xi = (2n + epsilon) hbar sqrt(beta)."""
    u = xi / params.length_scale
    return u - 2.0 * round(0.5 * u)


def lattice_points(lattice: LatticeSpec, params: ModelParams) -> list[tuple[int, float]]:
    """(n, xi_n) pairs; +-1 offsets give the same lattice shifted by one site."""
    return [(n, (2 * n + lattice.epsilon) * params.length_scale) for n in lattice.indices]


def eigen_overlap_analytic(xi: float, xi_prime: float, params: ModelParams) -> float:
    """<psi_xi|psi_xi'> = 2 sin(k pi / 2) / (pi k), k = (xi' - xi) / (hbar sqrt(beta))."""
    k = (xi_prime - xi) / params.length_scale
    if abs(k) < COINCIDENCE:
        return 1.0 - (math.pi * k) ** 2 / 24.0
    return 2.0 * math.sin(0.5 * math.pi * k) / (math.pi * k)


def gram_matrix(
    lattice: LatticeSpec,
    family: StateFamily,
    measure: Measure,
    params: ModelParams,
    cfg: QuadratureConfig,
    seed: int = 0,
) -> GramMatrix:
    """Overlaps <family(xi_n)|family(xi_n')> under ``measure``.

    Entries depend on n - n' only and are conjugate symmetric, so one row of
    quadratures fills the matrix; ten entries chosen by ``seed`` are then
    recomputed directly.

    Raises:
        GramAssemblyError: an entry failed to integrate.
    """
    points = dict(lattice_points(lattice, params))
    first = lattice.n_min
    size = lattice.size
    spacing = 2.0 * params.length_scale

    row: dict[int, IntegralResult] = {}
    for offset in range(size):
        n_prime = first + offset
        row[offset] = _entry(family, measure, points[first], points[n_prime], params, cfg, (first, n_prime))

    entries = np.empty((size, size), dtype=complex)
    errors = np.empty((size, size))
    for i in range(size):
        for j in range(size):
            result = row[abs(j - i)]
            entries[i, j] = result.value if j >= i else result.value.conjugate()
            errors[i, j] = result.error_estimate
    evaluations = sum(r.evaluations for r in row.values())

    rng = np.random.default_rng(seed)
    checks: list[tuple[int, int]] = []
    deviation = 0.0
    if size > 1:
        for _ in range(SPOT_CHECKS):
            i, j = (int(v) for v in rng.integers(0, size, size=2))
            n, n_prime = first + i, first + j
            direct = _entry(family, measure, points[n], points[n_prime], params, cfg, (n, n_prime))
            deviation = max(deviation, abs(direct.value - entries[i, j]))
            evaluations += direct.evaluations
            checks.append((n, n_prime))
        logger.info(
            "gram %s/%s: spot checks %s, max deviation %.3g (spacing %g)",
            family.value,
            measure.value,
            checks,
            deviation,
            spacing,
        )

    return GramMatrix(
        entries=entries,
        errors=errors,
        lattice=lattice,
        family=family,
        measure=measure,
        spot_checks=checks,
        spot_check_max_deviation=deviation,
        evaluations=evaluations,
    )


def _entry(family, measure, xi, xi_prime, params, cfg, index) -> IntegralResult:
    hint = abs(xi_prime - xi) / params.length_scale
    try:
        return inner_product(
            family_state(family, xi), family_state(family, xi_prime), measure, params, cfg.with_hint(hint)
        )
    except QuadratureError as exc:
        raise GramAssemblyError(index[0], index[1], exc) from exc


def _parseval_term(m: int, epsilon: float) -> float:
    u = 2 * m + epsilon
    if u == 0.0:
        return 1.0
    # sin^2((2m + eps) pi / 2) = sin^2(eps pi / 2)
    return 4.0 / math.pi**2 * math.sin(0.5 * math.pi * epsilon) ** 2 / (u * u)


def _ordered_indices(N: int):
    yield 0
    for k in range(1, N + 1):
        yield -k
        yield k


def parseval_sum(target_xi: float, N: int, params: ModelParams) -> float:
    """Sum over |m| <= N of |<psi_{2 n hbar sqrt(beta)}|psi_xi>|^2.

    Summed in ascending |m|, negative first; tends to 1 from below.
    """
    if N < 0:
        raise DomainError("truncation N must be non-negative")
    epsilon = reduced_offset(target_xi, params)
    total = 0.0
    for m in _ordered_indices(N):
        total += _parseval_term(m, epsilon)
    return total


def parseval_curve(target_xi: float, truncations: list[int], params: ModelParams) -> list[tuple[int, float]]:
    """S_N for each N in ``truncations``, accumulated in the same order as parseval_sum."""
    epsilon = reduced_offset(target_xi, params)
    wanted = sorted(set(truncations))
    curve = []
    total = _parseval_term(0, epsilon)
    reached = 0
    for N in wanted:
        for k in range(reached + 1, N + 1):
            total += _parseval_term(-k, epsilon)
            total += _parseval_term(k, epsilon)
        reached = max(reached, N)
        curve.append((N, total))
    return curve


def unitary_map_image(f, params: ModelParams, t):
    """U f(t) = beta^(-1/4) sec(t) f(tan(t) / sqrt(beta)) for |t| < pi/2.

    Raises:
        DomainError: |t| >= pi/2.
    """
    ts = np.asarray(t, dtype=float)
    if np.any(np.abs(ts) >= 0.5 * math.pi):
        raise DomainError("the unitary map is defined on the open interval (-pi/2, pi/2)")
    value = params.beta**-0.25 / np.cos(ts) * evaluate(f, params, np.tan(ts) / params.sqrt_beta)
    return complex(value) if np.ndim(t) == 0 else value


def plane_wave_image(xi: float, params: ModelParams, t):
    """exp(-i xi t / (hbar sqrt(beta))) / sqrt(pi), the image of psi_xi."""
    value = np.exp(-1j * xi * np.asarray(t, dtype=float) / params.length_scale) / math.sqrt(math.pi)
    return complex(value) if np.ndim(t) == 0 else value


def ml_plane_wave_image(xi: float, params: ModelParams, t):
    """sqrt(2/pi) cos(t) exp(-i xi t / (hbar sqrt(beta))), the image of a maximally localized state."""
    ts = np.asarray(t, dtype=float)
    value = math.sqrt(2.0 / math.pi) * np.cos(ts) * np.exp(-1j * xi * ts / params.length_scale)
    return complex(value) if np.ndim(t) == 0 else value


def verify_isometry(f, g, params: ModelParams, cfg: QuadratureConfig) -> tuple[IntegralResult, IntegralResult]:
    """(<Uf, Ug> over (-pi/2, pi/2), <f, g> over the momentum line).

    The first integral runs on the adaptive engine in t, the second through
    QUADPACK's infinite-interval rule in p, so the two are independent.
    """

    def image_product(t: np.ndarray) -> np.ndarray:
        return np.conj(unitary_map_image(f, params, t)) * unitary_map_image(g, params, t)

    def line_product(p: np.ndarray) -> np.ndarray:
        return np.conj(evaluate(f, params, p)) * evaluate(g, params, p)

    mapped = integrate_interval(image_product, -0.5 * math.pi, 0.5 * math.pi, cfg)
    line = integrate_reference(line_product, -math.inf, math.inf, cfg)
    return mapped, line


def expansion_coefficients(state, lattice: LatticeSpec, params: ModelParams, cfg: QuadratureConfig) -> list[IntegralResult]:
    """c_n = <psi_{xi_n}|state> for each lattice site."""
    return [
        inner_product(SymEigen(xi=xi), state, Measure.standard, params, cfg.with_hint(abs(xi) / params.length_scale))
        for _, xi in lattice_points(lattice, params)
    ]


def completeness_sum(state, N: int, params: ModelParams, cfg: QuadratureConfig) -> IntegralResult:
    """Sum of |c_n|^2 over |n| <= N on the epsilon = 0 lattice."""
    coefficients = expansion_coefficients(state, LatticeSpec(epsilon=0.0, n_min=-N, n_max=N), params, cfg)
    total = math.fsum(abs(c.value) ** 2 for c in coefficients)
    error = math.fsum(2.0 * abs(c.value) * c.error_estimate for c in coefficients)
    evaluations = sum(c.evaluations for c in coefficients)
    return IntegralResult(value=total, error_estimate=error, evaluations=evaluations)


def lattice_reconstruction(state, N: int, params: ModelParams, cfg: QuadratureConfig, p):
    """Partial sum of c_n psi_{xi_n}(p) over |n| <= N on the epsilon = 0 lattice."""
    lattice = LatticeSpec(epsilon=0.0, n_min=-N, n_max=N)
    coefficients = expansion_coefficients(state, lattice, params, cfg)
    total = np.zeros(np.shape(p), dtype=complex)
    for c, (_, xi) in zip(coefficients, lattice_points(lattice, params)):
        total = total + c.value * evaluate(SymEigen(xi=xi), params, p)
    return complex(total) if np.ndim(p) == 0 else total
