from enum import Enum

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from gupnum.models.params import Measure


class StateFamily(str, Enum):
    sym_eigen = "sym-eigen"
    maxloc = "maxloc"
    kmm_eigen = "kmm-eigen"


class LatticeSpec(BaseModel):
    """Discrete family xi_n = (2n + epsilon) hbar sqrt(beta), n_min <= n <= n_max."""

    model_config = ConfigDict(frozen=True)

    epsilon: float = Field(default=0.0, ge=-1.0, le=1.0)
    n_min: int = -2
    n_max: int = 2

    @model_validator(mode="after")
    def check_range(self) -> "LatticeSpec":
        if self.n_min > self.n_max:
            raise ValueError("n_min must not exceed n_max")
        return self

    @property
    def indices(self) -> list[int]:
        return list(range(self.n_min, self.n_max + 1))

    @property
    def size(self) -> int:
        return self.n_max - self.n_min + 1


class GramMatrix(BaseModel):
    """Overlaps of a lattice family; rows and columns follow lattice.indices."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    entries: np.ndarray
    errors: np.ndarray
    lattice: LatticeSpec
    family: StateFamily
    measure: Measure
    spot_checks: list[tuple[int, int]] = []
    spot_check_max_deviation: float = 0.0
    evaluations: int = 0

    def deviation_from_identity(self) -> float:
        return float(np.max(np.abs(self.entries - np.eye(self.lattice.size))))

    def max_off_diagonal(self) -> float:
        off = self.entries - np.diag(np.diag(self.entries))
        return float(np.max(np.abs(off))) if off.size else 0.0
