"""Vacuum energy densities and the cutoff scan."""

from __future__ import annotations

import math

from gupnum.errors import ConfigError, DomainError, GupError
from gupnum.experiments.base import exact, failed_row, format_label, measured
from gupnum.models.experiment import ExperimentConfig, ExperimentName, Measured, ResultRow, ResultTable
from gupnum.models.vacuum import VacuumParams
from gupnum.numerics.vacuum import (
    divergence_scan,
    massless_modified_density,
    planck_cutoff_comparison,
    vacuum_energy_density,
)


def _reference(vp: VacuumParams, modified: bool) -> Measured | None:
    if vp.mass != 0.0:
        return None
    if modified and vp.cutoff is None:
        return exact(massless_modified_density(vp.params))
    if not modified and vp.cutoff is not None:
        return exact(vp.cutoff**4 / (16.0 * math.pi**2))
    return None


def _density_row(kind: str, vp: VacuumParams, modified: bool, config: ExperimentConfig) -> ResultRow:
    labels = {"kind": kind, "mass": vp.mass, "modified": str(modified).lower(), "cutoff": format_label(vp.cutoff)}
    try:
        result = vacuum_energy_density(vp, modified, config.quadrature)
    except GupError as exc:
        return failed_row(labels, exc)
    values = {"density": measured(result, complex_valued=False)}
    reference = _reference(vp, modified)
    if reference is not None:
        values["closed_form"] = reference
    return ResultRow(labels=labels, values=values)


def run(config: ExperimentConfig) -> ResultTable:
    vp = VacuumParams(mass=config.mass, params=config.params)
    table = ResultTable(experiment=ExperimentName.vacuum)

    if config.modified:
        table.rows.append(_density_row("density", vp, True, config))
        for cutoff in sorted(config.cutoffs):
            table.rows.append(_density_row("cutoff", vp.with_cutoff(cutoff), True, config))
        return table

    try:
        modified, unmodified = planck_cutoff_comparison(vp, config.quadrature)
    except GupError as exc:
        table.rows.append(failed_row({"kind": "planck-comparison", "mass": vp.mass}, exc))
    else:
        planck = format_label(config.params.momentum_scale)
        for kind, flag, cutoff, result in (
            ("planck-modified", "true", "none", modified),
            ("planck-unmodified", "false", planck, unmodified),
        ):
            table.rows.append(
                ResultRow(
                    labels={"kind": kind, "mass": vp.mass, "modified": flag, "cutoff": cutoff},
                    values={"density": measured(result, complex_valued=False)},
                )
            )

    try:
        scan = divergence_scan(vp, config.cutoffs, config.quadrature)
    except DomainError as exc:
        raise ConfigError(str(exc)) from exc
    except GupError as exc:
        table.rows.append(failed_row({"kind": "scan", "mass": vp.mass}, exc))
        return table
    for point in scan.points:
        cutoff_vp = vp.with_cutoff(point.cutoff)
        values = {"density": Measured.of(point.density, point.error_estimate)}
        reference = _reference(cutoff_vp, False)
        if reference is not None:
            values["closed_form"] = reference
        table.rows.append(
            ResultRow(
                labels={"kind": "scan", "mass": vp.mass, "modified": "false", "cutoff": format_label(point.cutoff)},
                values=values,
            )
        )
    table.rows.append(
        ResultRow(
            labels={"kind": "slope", "mass": vp.mass, "modified": "false", "cutoff": "none"},
            values={"slope": Measured.of(scan.slope)},
        )
    )
    table.notes.append(f"log-log growth exponent of the unmodified density = {scan.slope:.9f}")
    return table
