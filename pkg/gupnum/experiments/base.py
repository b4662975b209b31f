"""Row helpers shared by the experiment modules."""

from __future__ import annotations

import logging
import math

from gupnum.errors import GupError
from gupnum.models.experiment import Measured, ResultRow, RowStatus
from gupnum.models.quadrature import IntegralResult

logger = logging.getLogger(__name__)


def measured(result: IntegralResult, complex_valued: bool = True) -> Measured:
    if complex_valued:
        return Measured.of(result.value, result.error_estimate, complex_valued=True)
    return Measured.of(result.value.real, result.error_estimate)


def exact(value: float) -> Measured:
    """A closed-form value, carried with a zero error estimate."""
    return Measured.of(value)


def failed_row(labels: dict, exc: GupError) -> ResultRow:
    logger.warning("row %s failed: %s", labels, exc)
    return ResultRow(labels=labels, status=RowStatus.failed, detail=f"{type(exc).__name__}: {exc}")


def relative_deviation(value: complex, reference: float) -> float:
    if reference == 0.0:
        return abs(value)
    return abs(value - reference) / abs(reference)


def format_label(value: float | None) -> str:
    if value is None or math.isinf(value):
        return "none"
    return format(value, ".12g")
