"""Span sums S_N against the truncation N."""

from __future__ import annotations

import math

from gupnum.experiments.base import exact
from gupnum.models.experiment import ExperimentConfig, ExperimentName, ResultRow, ResultTable
from gupnum.numerics.eigenbasis import parseval_curve
from gupnum.numerics.maxloc import ml_parseval_sum, ml_span_sum


def run(config: ExperimentConfig) -> ResultTable:
    params = config.params
    target = config.epsilon * params.length_scale
    table = ResultTable(experiment=ExperimentName.parseval)

    for N, total in parseval_curve(target, config.truncations, params):
        values = {
            "eigen_sum": exact(total),
            "eigen_deficit": exact(1.0 - total),
            "ml_sum": exact(ml_parseval_sum(target, N, params)),
            "ml_span": exact(ml_span_sum(N)),
        }
        if N > 0:
            values["deficit_bound"] = exact(3.0 / (math.pi**2 * N))
        table.rows.append(ResultRow(labels={"epsilon": config.epsilon, "N": N}, values=values))

    if config.epsilon == 0.0:
        table.notes.append("epsilon = 0: the target is a lattice point and every S_N is exactly 1")
    return table
