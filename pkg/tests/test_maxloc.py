import math

import numpy as np
import pytest

from gupnum.errors import DomainError
from gupnum.models.params import ModelParams
from gupnum.models.quadrature import QuadratureConfig
from gupnum.numerics.maxloc import (
    lattice_closed_form,
    ml_eigen_overlap_analytic,
    ml_eigen_overlap_quadrature,
    ml_ode_residual,
    ml_overlap_analytic,
    ml_overlap_quadrature,
    ml_parseval_sum,
    ml_span_sum,
)


def test_adjacent_sites_overlap_by_one_half(params: ModelParams, cfg: QuadratureConfig) -> None:
    assert ml_overlap_analytic(0.0, 2.0, params) == pytest.approx(0.5)
    assert ml_overlap_analytic(0.0, 2.0 + 1e-9, params) == pytest.approx(0.5, abs=1e-8)
    result = ml_overlap_quadrature(0.0, 2.0, params, cfg)
    assert result.value == pytest.approx(0.5, abs=1e-10)


def test_self_overlap_is_one(params: ModelParams) -> None:
    assert ml_overlap_analytic(1.3, 1.3, params) == 1.0


@pytest.mark.parametrize("separation", [0.3, 1.0, 3.0, 4.0, 5.5, 10.0])
def test_ml_overlap_matches_quadrature(separation: float, params: ModelParams, cfg: QuadratureConfig) -> None:
    result = ml_overlap_quadrature(-0.4, -0.4 + separation, params, cfg)
    assert result.value == pytest.approx(ml_overlap_analytic(-0.4, -0.4 + separation, params), abs=1e-10)


@pytest.mark.parametrize("k", [0.0, 0.5, 1.0, 2.0, 3.0, -1.0, -4.0])
def test_ml_eigen_overlap_matches_quadrature(k: float, params: ModelParams, cfg: QuadratureConfig) -> None:
    result = ml_eigen_overlap_quadrature(0.0, k, params, cfg)
    assert result.value == pytest.approx(ml_eigen_overlap_analytic(0.0, k, params), abs=1e-10)


def test_ml_eigen_overlap_values(params: ModelParams) -> None:
    assert ml_eigen_overlap_analytic(0.0, 0.0, params) == pytest.approx(2 * math.sqrt(2) / math.pi)
    assert ml_eigen_overlap_analytic(0.0, 1.0, params) == pytest.approx(math.sqrt(2) / 2)
    assert ml_eigen_overlap_analytic(0.0, -1.0, params) == pytest.approx(math.sqrt(2) / 2)
    assert ml_eigen_overlap_analytic(0.0, 1.0 + 1e-8, params) == pytest.approx(math.sqrt(2) / 2, abs=1e-7)
    assert ml_eigen_overlap_analytic(0.0, 3.0, params) == pytest.approx(0.0, abs=1e-15)


def test_lattice_form_has_opposite_sign(params: ModelParams) -> None:
    for m in range(-4, 5):
        analytic = ml_eigen_overlap_analytic(0.0, 2.0 * m, params)
        assert lattice_closed_form(m) == pytest.approx(-analytic, rel=1e-12)


def test_overlaps_scale_with_length(cfg: QuadratureConfig) -> None:
    params = ModelParams(beta=4.0, hbar=0.5)
    assert params.length_scale == pytest.approx(1.0)
    assert ml_overlap_analytic(0.0, 2.0, params) == pytest.approx(0.5)
    assert ml_overlap_quadrature(0.0, 2.0, params, cfg).value == pytest.approx(0.5, abs=1e-10)


def test_span_sum_converges_from_below() -> None:
    sums = [ml_span_sum(N) for N in range(0, 51)]
    assert sums[0] == pytest.approx(8 / math.pi**2)
    assert all(b > a for a, b in zip(sums, sums[1:]))
    assert 0 < 1 - sums[50] < 1e-5


def test_parseval_on_lattice_equals_span_sum(params: ModelParams) -> None:
    for N in (0, 3, 50):
        assert ml_parseval_sum(0.0, N, params) == pytest.approx(ml_span_sum(N), rel=1e-13)


def test_parseval_half_offset(params: ModelParams) -> None:
    assert ml_parseval_sum(1.0, 0, params) == pytest.approx(0.5)
    for N in (1, 10, 100):
        assert ml_parseval_sum(1.0, N, params) == pytest.approx(1.0, abs=1e-14)


def test_negative_truncation_is_rejected(params: ModelParams) -> None:
    with pytest.raises(DomainError):
        ml_span_sum(-1)
    with pytest.raises(DomainError):
        ml_parseval_sum(0.0, -1, params)


@pytest.mark.parametrize("xi", [0.0, 1.7, -3.0])
def test_maxloc_solves_its_defining_equation(xi: float, params: ModelParams) -> None:
    p = np.linspace(-20.0, 20.0, 401)
    assert np.max(np.abs(ml_ode_residual(xi, p, params))) <= 1e-12


def test_other_widths_do_not_solve_the_equation(params: ModelParams) -> None:
    assert abs(ml_ode_residual(0.0, 1.0, params, delta_p=2.0)) > 1e-3


def test_overlaps_match_quadrature_on_random_pairs(
    params: ModelParams, cfg: QuadratureConfig, rng: np.random.Generator
) -> None:
    for xi, xi_prime in rng.uniform(-10.0, 10.0, size=(50, 2)):
        ml = ml_overlap_quadrature(xi, xi_prime, params, cfg)
        assert abs(ml.value - ml_overlap_analytic(xi, xi_prime, params)) <= 1e-9
        mixed = ml_eigen_overlap_quadrature(xi, xi_prime, params, cfg)
        assert abs(mixed.value - ml_eigen_overlap_analytic(xi, xi_prime, params)) <= 1e-9
