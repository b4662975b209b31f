import numpy as np
import pytest

from gupnum.models.params import ModelParams
from gupnum.models.quadrature import QuadratureConfig


@pytest.fixture
def params() -> ModelParams:
    return ModelParams(beta=1.0, hbar=1.0)


@pytest.fixture
def cfg() -> QuadratureConfig:
    return QuadratureConfig(rel_tol=1e-10, abs_tol=1e-12, max_subdivisions=2000)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)
