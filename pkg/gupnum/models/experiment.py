from enum import Enum
from pathlib import Path
from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from gupnum.config import Settings, settings
from gupnum.models.fourier import PhaseMode
from gupnum.models.lattice import LatticeSpec, StateFamily
from gupnum.models.params import Measure, ModelParams
from gupnum.models.quadrature import QuadratureConfig


class ExperimentName(str, Enum):
    gram = "gram"
    parseval = "parseval"
    ml_overlaps = "ml-overlaps"
    profiles = "profiles"
    gup = "gup"
    symmetry = "symmetry"
    vacuum = "vacuum"


class OutputFormat(str, Enum):
    csv = "csv"
    json = "json"


class RowStatus(str, Enum):
    ok = "ok"
    failed = "failed"


class ExperimentConfig(BaseModel):
    """Fully resolved configuration of one experiment run.

    Serializes to JSON and back without loss; the manifest embeds it verbatim.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    experiment: ExperimentName
    beta: float = Field(default=1.0, gt=0)
    hbar: float = Field(default=1.0, gt=0)

    # Tolerance overrides
    rel_tol: float = Field(default=settings.rel_tol, gt=0)
    abs_tol: float = Field(default=settings.abs_tol, gt=0)
    max_subdivisions: int = Field(default=settings.max_subdivisions, ge=1)

    # Lattice
    family: Optional[StateFamily] = None
    measure: Optional[Measure] = None
    epsilon: float = Field(default=0.0, ge=-1.0, le=1.0)
    n_min: int = -2
    n_max: int = 2
    truncations: List[int] = Field(default=[10, 100, 1000], min_length=1)

    # States and grids
    state: Optional[Literal["sym-eigen", "maxloc", "gaussian"]] = None
    xi: float = 0.0
    x_min: float = -5.0
    x_max: float = 5.0
    x_count: int = Field(default=41, ge=1)
    mode: Optional[PhaseMode] = None
    sigmas: List[float] = Field(default=[0.25, 0.5, 1.0, 2.0, 4.0], min_length=1)

    # Vacuum
    mass: float = Field(default=0.0, ge=0)
    modified: bool = False
    cutoffs: List[float] = Field(default=[10.0, 100.0, 1000.0, 10000.0], min_length=1)

    seed: int = 0
    output_dir: Path = Field(default_factory=lambda: Settings().output_dir)
    output_format: OutputFormat = OutputFormat.csv

    @field_validator("truncations")
    @classmethod
    def validate_truncations(cls, v: List[int]) -> List[int]:
        if any(n < 0 for n in v):
            raise ValueError("truncations must be non-negative")
        return v

    @field_validator("sigmas", "cutoffs")
    @classmethod
    def validate_positive(cls, v: List[float]) -> List[float]:
        if not all(value > 0 for value in v):
            raise ValueError("all entries must be positive")
        return v

    @model_validator(mode="after")
    def validate_ranges(self) -> "ExperimentConfig":
        if self.n_min > self.n_max:
            raise ValueError("n range must be given as a..b with a <= b")
        if self.x_min > self.x_max:
            raise ValueError("x_min must not exceed x_max")
        return self

    @property
    def params(self) -> ModelParams:
        return ModelParams(beta=self.beta, hbar=self.hbar)

    @property
    def quadrature(self) -> QuadratureConfig:
        return QuadratureConfig(
            rel_tol=self.rel_tol, abs_tol=self.abs_tol, max_subdivisions=self.max_subdivisions
        )

    @property
    def lattice(self) -> LatticeSpec:
        return LatticeSpec(epsilon=self.epsilon, n_min=self.n_min, n_max=self.n_max)

    def computation_dump(self) -> dict:
        """Config fields that influence the numbers (everything but output location and format)."""
        return self.model_dump(mode="json", exclude={"output_dir", "output_format"})


class Measured(BaseModel):
    """A numeric cell and its error estimate; imag is set for complex quantities."""

    value: float
    imag: Optional[float] = None
    error: float = Field(default=0.0, ge=0)

    @classmethod
    def of(cls, value: complex | float, error: float = 0.0, complex_valued: bool = False) -> "Measured":
        if complex_valued or isinstance(value, complex):
            z = complex(value)
            return cls(value=z.real, imag=z.imag, error=error)
        return cls(value=float(value), error=error)


class ResultRow(BaseModel):
    """One line of a results table."""

    labels: dict[str, str | int | float] = {}
    values: dict[str, Optional[Measured]] = {}
    status: RowStatus = RowStatus.ok
    detail: str = ""


class ResultTable(BaseModel):
    """Rows of one experiment plus notes on findings worth reading first."""

    experiment: ExperimentName
    rows: list[ResultRow] = []
    notes: list[str] = []

    @property
    def failed_rows(self) -> int:
        return sum(1 for row in self.rows if row.status is RowStatus.failed)

    def label_columns(self) -> list[str]:
        columns: list[str] = []
        for row in self.rows:
            columns.extend(k for k in row.labels if k not in columns)
        return columns

    def value_columns(self) -> list[str]:
        columns: list[str] = []
        for row in self.rows:
            columns.extend(k for k in row.values if k not in columns)
        return columns

    def complex_columns(self) -> set[str]:
        return {
            name
            for row in self.rows
            for name, cell in row.values.items()
            if cell is not None and cell.imag is not None
        }

    def max_errors(self) -> dict[str, float]:
        """Largest error estimate per value column."""
        errors: dict[str, float] = {}
        for row in self.rows:
            for name, cell in row.values.items():
                if cell is not None:
                    errors[name] = max(errors.get(name, 0.0), cell.error)
        return errors


class Manifest(BaseModel):
    """Everything needed to reproduce a results file."""

    tool: str = "gupnum"
    version: str
    config: ExperimentConfig
    config_hash: str
    results_file: str
    row_count: int
    failed_rows: int
    max_errors: dict[str, float]
    notes: list[str] = []
