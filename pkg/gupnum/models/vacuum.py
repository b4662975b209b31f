from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from gupnum.models.params import ModelParams


class VacuumParams(BaseModel):
    """Field mass (c = 1), model constants and an optional momentum cutoff."""

    model_config = ConfigDict(frozen=True)

    mass: float = Field(default=0.0, ge=0)
    params: ModelParams = ModelParams()
    cutoff: Optional[float] = Field(default=None, gt=0)

    def with_cutoff(self, cutoff: Optional[float]) -> "VacuumParams":
        return self.model_copy(update={"cutoff": cutoff})


class ScanPoint(BaseModel):
    cutoff: float
    density: float
    error_estimate: float


class DivergenceScan(BaseModel):
    """Densities against cutoff and the fitted log-log growth exponent."""

    points: list[ScanPoint]
    slope: float
    modified: bool
