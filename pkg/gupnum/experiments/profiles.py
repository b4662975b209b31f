"""Position-space amplitudes in both phase modes against the closed forms."""

from __future__ import annotations

import logging

import numpy as np

from gupnum.errors import ConfigError, GupError
from gupnum.experiments.base import exact, failed_row, measured, relative_deviation
from gupnum.models.experiment import ExperimentConfig, ExperimentName, Measured, ResultRow, ResultTable
from gupnum.models.fourier import PhaseMode
from gupnum.models.states import MaxLoc, SymEigen
from gupnum.numerics.fourier import MIN_OFFSET, closed_form, plancherel_norm, position_amplitude, singular_point

logger = logging.getLogger(__name__)


def _states(config: ExperimentConfig):
    if config.state == "gaussian":
        raise ConfigError("profiles compares against closed forms; use --state sym-eigen or maxloc")
    if config.state == "sym-eigen":
        return [SymEigen(xi=config.xi)]
    if config.state == "maxloc":
        return [MaxLoc(xi=config.xi)]
    return [SymEigen(xi=config.xi), MaxLoc(xi=config.xi)]


def _too_close(state, modes, x: float, guard: float) -> bool:
    if isinstance(state, SymEigen) and abs(x - state.xi) < guard:
        return True
    for mode in modes:
        singular = singular_point(state, mode)
        if singular is not None and abs(x - singular) < guard:
            return True
    return False


def run(config: ExperimentConfig) -> ResultTable:
    params, cfg = config.params, config.quadrature
    modes = [config.mode] if config.mode else list(PhaseMode)
    guard = MIN_OFFSET * params.length_scale
    xs = [float(x) for x in np.linspace(config.x_min, config.x_max, config.x_count)]
    table = ResultTable(experiment=ExperimentName.profiles)

    for state in _states(config):
        skipped = [x for x in xs if _too_close(state, modes, x, guard)]
        if skipped:
            table.notes.append(
                f"{state.kind}: skipped x = {', '.join(format(x, '.6g') for x in skipped)} "
                f"(within {guard:g} of the log singularity)"
            )
        for x in xs:
            if x in skipped:
                continue
            labels = {"state": state.kind, "xi": state.xi, "x": x}
            try:
                amplitudes = {mode: position_amplitude(state, mode, params, x, cfg) for mode in modes}
                reference = closed_form(state, x, params)
            except GupError as exc:
                table.rows.append(failed_row(labels, exc))
                continue

            values: dict[str, Measured] = {"closed_form": exact(reference)}
            for mode, result in amplitudes.items():
                values[mode.value] = measured(result)
                values[f"{mode.value}_rel_dev"] = Measured.of(
                    relative_deviation(result.value, reference), result.error_estimate / abs(reference)
                )
            if len(amplitudes) == 2:
                a, b = amplitudes[PhaseMode.exact], amplitudes[PhaseMode.linearized]
                values["gap"] = Measured.of(abs(a.value - b.value), a.error_estimate + b.error_estimate)
            table.rows.append(ResultRow(labels=labels, values=values))

        if isinstance(state, MaxLoc):
            mode = modes[0]
            try:
                norm = plancherel_norm(state, mode, params, cfg)
            except GupError as exc:
                table.notes.append(f"maxloc plancherel norm failed: {exc}")
            else:
                table.notes.append(f"maxloc plancherel norm ({mode.value}) = {norm:.12g}")
    return table
