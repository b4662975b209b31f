from .experiment import (
    ExperimentConfig,
    ExperimentName,
    Manifest,
    Measured,
    OutputFormat,
    ResultRow,
    ResultTable,
    RowStatus,
)
from .fourier import PhaseMode
from .lattice import GramMatrix, LatticeSpec, StateFamily
from .operators import OperatorSpec, UncertaintyReport
from .params import Measure, ModelParams
from .quadrature import IntegralResult, QuadratureConfig
from .states import ClosedForm, Gaussian, GridState, KmmEigen, MaxLoc, StateSpec, SymEigen
from .vacuum import DivergenceScan, ScanPoint, VacuumParams

__all__ = [
    "ClosedForm",
    "DivergenceScan",
    "ExperimentConfig",
    "ExperimentName",
    "Gaussian",
    "GramMatrix",
    "GridState",
    "IntegralResult",
    "KmmEigen",
    "LatticeSpec",
    "Manifest",
    "MaxLoc",
    "Measure",
    "Measured",
    "ModelParams",
    "OperatorSpec",
    "OutputFormat",
    "PhaseMode",
    "QuadratureConfig",
    "ResultRow",
    "ResultTable",
    "RowStatus",
    "ScanPoint",
    "StateFamily",
    "StateSpec",
    "SymEigen",
    "UncertaintyReport",
    "VacuumParams",
]
