import math

import numpy as np
import pytest

from gupnum.errors import DivergentMomentError, NonNormalizableStateError
from gupnum.models.operators import OperatorSpec
from gupnum.models.params import Measure, ModelParams
from gupnum.models.quadrature import QuadratureConfig
from gupnum.models.states import Gaussian, KmmEigen, MaxLoc, SymEigen
from gupnum.numerics.operators import (
    apply,
    commutator_residual,
    gup_check,
    kmm_defect_prediction,
    matrix_element,
    min_position_uncertainty,
    symmetry_defect,
)
from gupnum.numerics.states import evaluate, odd_gaussian_grid

P = np.linspace(-20.0, 20.0, 2001)


@pytest.mark.parametrize("state", [SymEigen(xi=1.3), MaxLoc(xi=-0.8), Gaussian(sigma=1.5, p0=0.2, x0=0.4)])
@pytest.mark.parametrize("op", [OperatorSpec.x_sym, OperatorSpec.x_kmm])
def test_commutator_is_deformed(state, op: OperatorSpec, params: ModelParams) -> None:
    assert np.max(np.abs(commutator_residual(state, params, P, op))) <= 1e-10


def test_eigenstates_are_eigenvectors(params: ModelParams, rng: np.random.Generator) -> None:
    for xi in rng.uniform(-10.0, 10.0, size=10):
        psi = evaluate(SymEigen(xi=xi), params, P)
        np.testing.assert_allclose(apply(OperatorSpec.x_sym, SymEigen(xi=xi), params, P), xi * psi, atol=1e-12)


def test_kmm_eigenstate(params: ModelParams) -> None:
    state = KmmEigen(xi=2.5)
    np.testing.assert_allclose(
        apply(OperatorSpec.x_kmm, state, params, P), 2.5 * evaluate(state, params, P), atol=1e-12
    )


def test_maxloc_position_action(params: ModelParams) -> None:
    state = MaxLoc(xi=0.7)
    expected = (0.7 - 1j * params.hbar * params.beta * P) * evaluate(state, params, P)
    np.testing.assert_allclose(apply(OperatorSpec.x_sym, state, params, P), expected, atol=1e-12)


def test_scalar_application(params: ModelParams) -> None:
    value = apply(OperatorSpec.p, Gaussian(), params, 2.0)
    assert isinstance(value, complex)
    assert value == pytest.approx(2.0 * evaluate(Gaussian(), params, 2.0))


def test_position_expectation_of_maxloc(params: ModelParams, cfg: QuadratureConfig) -> None:
    state = MaxLoc(xi=1.1)
    result = matrix_element(state, OperatorSpec.x_sym, state, Measure.standard, params, cfg)
    assert result.value == pytest.approx(1.1, abs=1e-9)


_PSI = Gaussian(sigma=1.0)
_PHI = Gaussian(sigma=0.7, p0=0.3, x0=0.5)


@pytest.mark.parametrize(
    ("op", "measure"),
    [
        (OperatorSpec.x_sym, Measure.standard),
        (OperatorSpec.x_kmm, Measure.kmm),
        (OperatorSpec.p, Measure.standard),
        (OperatorSpec.p_squared, Measure.kmm),
        (OperatorSpec.one_beta_p2, Measure.standard),
    ],
)
def test_symmetric_pairs_have_no_defect(
    op: OperatorSpec, measure: Measure, params: ModelParams, cfg: QuadratureConfig
) -> None:
    assert abs(symmetry_defect(op, measure, _PSI, _PHI, params, cfg).value) <= 1e-10


def test_symmetric_on_adjacent_maxloc_states(params: ModelParams, cfg: QuadratureConfig) -> None:
    defect = symmetry_defect(OperatorSpec.x_sym, Measure.standard, MaxLoc(xi=0.0), MaxLoc(xi=2.0), params, cfg)
    assert abs(defect.value) <= 1e-10


def test_kmm_operator_defect_under_standard_measure(params: ModelParams, cfg: QuadratureConfig) -> None:
    defect = symmetry_defect(OperatorSpec.x_kmm, Measure.standard, _PSI, _PHI, params, cfg)
    predicted = kmm_defect_prediction(_PSI, _PHI, params, cfg)
    assert abs(defect.value) >= 1e-3
    assert abs(defect.value - predicted.value) <= 1e-8


def test_kmm_defect_on_sampled_odd_state(params: ModelParams, cfg: QuadratureConfig) -> None:
    grid = odd_gaussian_grid()
    defect = symmetry_defect(OperatorSpec.x_kmm, Measure.standard, grid, Gaussian(sigma=1.0), params, cfg)
    assert defect.value == pytest.approx(-1j * math.sqrt(2.0), abs=1e-8)
    predicted = kmm_defect_prediction(grid, Gaussian(sigma=1.0), params, cfg)
    assert abs(defect.value - predicted.value) <= 1e-8


@pytest.mark.parametrize("beta", [1.0, 4.0])
def test_maxloc_saturates_the_bound(beta: float, cfg: QuadratureConfig) -> None:
    params = ModelParams(beta=beta, hbar=1.0)
    report = gup_check(MaxLoc(xi=0.5), params, cfg)
    assert report.mean_X == pytest.approx(0.5, abs=1e-8)
    assert report.mean_p == pytest.approx(0.0, abs=1e-10)
    assert report.delta_X == pytest.approx(params.length_scale, rel=1e-8)
    assert report.delta_p == pytest.approx(params.momentum_scale, rel=1e-8)
    assert report.lhs == pytest.approx(report.rhs, rel=1e-8)
    assert report.floor == pytest.approx(report.rhs, rel=1e-8)
    assert abs(report.slack) <= 1e-8


@pytest.mark.parametrize("sigma", [0.25, 0.5, 1.0, 2.0, 4.0])
def test_gaussians_respect_the_bound(sigma: float, params: ModelParams, cfg: QuadratureConfig) -> None:
    report = gup_check(Gaussian(sigma=sigma, x0=0.3), params, cfg)
    assert report.delta_p == pytest.approx(sigma / math.sqrt(2.0), rel=1e-8)
    # X_sym stretches the offset by 1 + beta <p^2>.
    assert report.mean_X == pytest.approx(0.3 * (1.0 + params.beta * sigma**2 / 2.0), rel=1e-8)
    assert report.lhs >= report.rhs - 1e-9
    assert report.delta_X >= min_position_uncertainty(report.delta_p, params) - 1e-9


def test_eigenstate_moments_diverge(params: ModelParams) -> None:
    with pytest.raises(DivergentMomentError):
        gup_check(SymEigen(xi=0.0), params, QuadratureConfig(max_subdivisions=200))


def test_kmm_eigenstate_is_not_normalizable(params: ModelParams) -> None:
    with pytest.raises(NonNormalizableStateError):
        gup_check(KmmEigen(xi=0.0), params, QuadratureConfig(max_subdivisions=200))


def test_min_position_uncertainty(params: ModelParams) -> None:
    assert min_position_uncertainty(params.momentum_scale, params) == pytest.approx(params.length_scale)
    assert min_position_uncertainty(0.5, params) > params.length_scale
    assert min_position_uncertainty(2.0, params) > params.length_scale
