import math
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field


class Measure(str, Enum):
    standard = "standard"
    kmm = "kmm"


class ModelParams(BaseModel):
    """Physical constants fixing every scale of the model."""

    model_config = ConfigDict(frozen=True)

    beta: float = Field(default=1.0, gt=0, description="Deformation, inverse momentum squared")
    hbar: float = Field(default=1.0, gt=0, description="Reduced Planck constant")

    @property
    def sqrt_beta(self) -> float:
        return math.sqrt(self.beta)

    @property
    def length_scale(self) -> float:
        """Minimal length hbar * sqrt(beta)."""
        return self.hbar * math.sqrt(self.beta)

    @property
    def momentum_scale(self) -> float:
        return 1.0 / math.sqrt(self.beta)
