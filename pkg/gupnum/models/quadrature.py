from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from gupnum.config import settings


class QuadratureConfig(BaseModel):
    """Tolerances and limits for one adaptive integration."""

    model_config = ConfigDict(frozen=True)

    rel_tol: float = Field(default=settings.rel_tol, gt=0)
    abs_tol: float = Field(default=settings.abs_tol, gt=0)
    max_subdivisions: int = Field(default=settings.max_subdivisions, ge=1)
    oscillation_hint: Optional[float] = Field(
        default=None,
        ge=0,
        description="Characteristic phase frequency in the integration variable",
    )
    fourier_cycles: int = Field(default=settings.fourier_cycles, ge=1)

    def with_hint(self, omega: Optional[float]) -> "QuadratureConfig":
        return self.model_copy(update={"oscillation_hint": omega})

    def tolerance(self, value: complex) -> float:
        return max(self.abs_tol, self.rel_tol * abs(value))


class IntegralResult(BaseModel):
    """Value, error estimate and evaluation count of one quadrature."""

    model_config = ConfigDict(frozen=True)

    value: complex
    error_estimate: float = Field(ge=0)
    evaluations: int = Field(default=0, ge=0)

    def __add__(self, other: "IntegralResult") -> "IntegralResult":
        return IntegralResult(
            value=self.value + other.value,
            error_estimate=self.error_estimate + other.error_estimate,
            evaluations=self.evaluations + other.evaluations,
        )

    def __sub__(self, other: "IntegralResult") -> "IntegralResult":
        return IntegralResult(
            value=self.value - other.value,
            error_estimate=self.error_estimate + other.error_estimate,
            evaluations=self.evaluations + other.evaluations,
        )

    def scaled(self, factor: complex) -> "IntegralResult":
        return IntegralResult(
            value=self.value * factor,
            error_estimate=self.error_estimate * abs(factor),
            evaluations=self.evaluations,
        )

    @property
    def real(self) -> float:
        return self.value.real
