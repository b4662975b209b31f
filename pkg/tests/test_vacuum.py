import math

import pytest

from gupnum.errors import DivergentIntegralError, DomainError
from gupnum.models.params import ModelParams
from gupnum.models.quadrature import QuadratureConfig
from gupnum.models.vacuum import VacuumParams
from gupnum.numerics.vacuum import (
    divergence_scan,
    massless_modified_density,
    planck_cutoff_comparison,
    vacuum_energy_density,
)

CUTOFFS = [10.0, 100.0, 1e3, 1e4]


def test_massless_modified_density(cfg: QuadratureConfig) -> None:
    result = vacuum_energy_density(VacuumParams(mass=0.0), True, cfg)
    assert result.real == pytest.approx(1 / (16 * math.pi**2), rel=1e-9)
    assert result.real == pytest.approx(0.0063326, abs=1e-7)
    assert massless_modified_density(ModelParams()) == pytest.approx(1 / (16 * math.pi**2))


def test_modified_density_scales_as_inverse_beta_squared(cfg: QuadratureConfig) -> None:
    params = ModelParams(beta=4.0)
    result = vacuum_energy_density(VacuumParams(mass=0.0, params=params), True, cfg)
    assert result.real == pytest.approx(massless_modified_density(params), rel=1e-9)
    assert massless_modified_density(params) == pytest.approx(massless_modified_density(ModelParams()) / 16)


@pytest.mark.parametrize("cutoff", CUTOFFS)
def test_unmodified_density_grows_as_fourth_power(cutoff: float, cfg: QuadratureConfig) -> None:
    result = vacuum_energy_density(VacuumParams(mass=0.0, cutoff=cutoff), False, cfg)
    assert result.real == pytest.approx(cutoff**4 / (16 * math.pi**2), rel=1e-9)


def test_unmodified_density_needs_a_cutoff(cfg: QuadratureConfig) -> None:
    with pytest.raises(DivergentIntegralError):
        vacuum_energy_density(VacuumParams(mass=1.0), False, cfg)


def test_massless_scan_slope(cfg: QuadratureConfig) -> None:
    scan = divergence_scan(VacuumParams(mass=0.0), CUTOFFS, cfg)
    assert [p.cutoff for p in scan.points] == CUTOFFS
    assert scan.slope == pytest.approx(4.0, abs=1e-9)
    assert not scan.modified


def test_massive_scan_slope_tends_to_four(cfg: QuadratureConfig) -> None:
    scan = divergence_scan(VacuumParams(mass=1.0), list(reversed(CUTOFFS)), cfg)
    assert [p.cutoff for p in scan.points] == CUTOFFS
    assert scan.slope == pytest.approx(4.0, abs=0.05)


def test_modified_scan_saturates(cfg: QuadratureConfig) -> None:
    scan = divergence_scan(VacuumParams(mass=0.0), CUTOFFS, cfg, modified=True)
    assert 0.0 < scan.slope < 0.01


@pytest.mark.parametrize(
    "cutoffs",
    [[10.0, 100.0, 1000.0], [10.0, 20.0, 50.0, 500.0], [-1.0, 10.0, 100.0, 1000.0], [0.0, 10.0, 100.0, 1000.0]],
)
def test_scan_rejects_thin_cutoff_sets(cutoffs: list[float], cfg: QuadratureConfig) -> None:
    with pytest.raises(DomainError):
        divergence_scan(VacuumParams(), cutoffs, cfg)


@pytest.mark.parametrize("cutoff", [2.0, 10.0, 100.0])
def test_cutoff_tail_is_bounded(cutoff: float, cfg: QuadratureConfig) -> None:
    full = vacuum_energy_density(VacuumParams(mass=0.0), True, cfg).real
    cut = vacuum_energy_density(VacuumParams(mass=0.0, cutoff=cutoff), True, cfg).real
    assert 0.0 < full - cut <= 1 / (2 * cutoff**2) / (4 * math.pi**2)


def test_density_increases_with_mass(cfg: QuadratureConfig) -> None:
    densities = [vacuum_energy_density(VacuumParams(mass=m), True, cfg).real for m in (0.0, 0.5, 1.0, 2.0)]
    assert all(b > a for a, b in zip(densities, densities[1:]))


@pytest.mark.parametrize("mass", [0.0, 1.0])
def test_modified_never_exceeds_unmodified(mass: float, cfg: QuadratureConfig) -> None:
    for cutoff in (0.5, 3.0, 30.0):
        vp = VacuumParams(mass=mass, cutoff=cutoff)
        assert vacuum_energy_density(vp, True, cfg).real <= vacuum_energy_density(vp, False, cfg).real


@pytest.mark.parametrize("beta", [1.0, 0.25])
def test_planck_cutoff_matches_modified_density(beta: float, cfg: QuadratureConfig) -> None:
    modified, unmodified = planck_cutoff_comparison(VacuumParams(mass=0.0, params=ModelParams(beta=beta)), cfg)
    assert modified.real == pytest.approx(unmodified.real, rel=1e-9)
    assert unmodified.real == pytest.approx(1 / (16 * math.pi**2 * beta**2), rel=1e-9)
