from enum import Enum

from pydantic import BaseModel, Field


class OperatorSpec(str, Enum):
    x_sym = "x-sym"
    x_kmm = "x-kmm"
    p = "p"
    p_squared = "p-squared"
    one_beta_p2 = "one-beta-p2"


class UncertaintyReport(BaseModel):
    """Moments of one state and both sides of the GUP bound."""

    mean_X: float
    mean_p: float
    mean_p2: float
    delta_X: float = Field(ge=0)
    delta_p: float = Field(ge=0)
    lhs: float
    rhs: float
    floor: float
    error_estimate: float = Field(default=0.0, ge=0)

    @property
    def slack(self) -> float:
        return self.lhs - self.rhs
