"""Uncertainty reports for maximally localized states and a Gaussian width sweep."""

from __future__ import annotations

from gupnum.errors import ConfigError, GupError
from gupnum.experiments.base import failed_row
from gupnum.models.experiment import ExperimentConfig, ExperimentName, Measured, ResultRow, ResultTable
from gupnum.models.operators import UncertaintyReport
from gupnum.models.states import Gaussian, MaxLoc
from gupnum.numerics.operators import gup_check

_FIELDS = ("mean_X", "mean_p", "mean_p2", "delta_X", "delta_p", "lhs", "rhs", "floor")


def _states(config: ExperimentConfig):
    if config.state == "sym-eigen":
        raise ConfigError("eigenstates are not normalizable; use --state maxloc or gaussian")
    if config.state in (None, "maxloc"):
        yield {"state": "maxloc", "xi": config.xi, "sigma": "none"}, MaxLoc(xi=config.xi)
    if config.state in (None, "gaussian"):
        for sigma in config.sigmas:
            yield {"state": "gaussian", "xi": config.xi, "sigma": sigma}, Gaussian(sigma=sigma, x0=config.xi)


def _row(labels: dict, report: UncertaintyReport) -> ResultRow:
    values = {name: Measured.of(getattr(report, name), report.error_estimate) for name in _FIELDS}
    values["slack"] = Measured.of(report.slack, report.error_estimate)
    return ResultRow(labels=labels, values=values)


def run(config: ExperimentConfig) -> ResultTable:
    params, cfg = config.params, config.quadrature
    table = ResultTable(experiment=ExperimentName.gup)
    worst = None
    for labels, state in _states(config):
        try:
            report = gup_check(state, params, cfg)
        except GupError as exc:
            table.rows.append(failed_row(labels, exc))
            continue
        table.rows.append(_row(labels, report))
        if worst is None or report.slack < worst:
            worst = report.slack
    if worst is not None:
        table.notes.append(f"smallest lhs - rhs over the sweep = {worst:.6e}")
    return table
