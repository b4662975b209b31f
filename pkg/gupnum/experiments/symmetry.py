"""Symmetry defects <psi|O phi> - <O psi|phi> over operators, measures and test pairs."""

from __future__ import annotations

from gupnum.errors import GupError
from gupnum.experiments.base import exact, failed_row, measured
from gupnum.models.experiment import ExperimentConfig, ExperimentName, ResultRow, ResultTable
from gupnum.models.operators import OperatorSpec
from gupnum.models.params import Measure, ModelParams
from gupnum.models.states import Gaussian, MaxLoc
from gupnum.numerics.operators import kmm_defect_prediction, symmetry_defect
from gupnum.numerics.states import odd_gaussian_grid

# Pairs on which the operator is known to be symmetric.
_SYMMETRIC = {
    (OperatorSpec.x_sym, Measure.standard),
    (OperatorSpec.x_kmm, Measure.kmm),
    (OperatorSpec.p, Measure.standard),
    (OperatorSpec.p, Measure.kmm),
    (OperatorSpec.p_squared, Measure.standard),
    (OperatorSpec.p_squared, Measure.kmm),
    (OperatorSpec.one_beta_p2, Measure.standard),
    (OperatorSpec.one_beta_p2, Measure.kmm),
}


def defect_corpus(params: ModelParams):
    """(name, psi, phi) test pairs; the last is the sampled odd state against an even Gaussian."""
    return [
        ("maxloc-adjacent", MaxLoc(xi=0.0), MaxLoc(xi=2.0 * params.length_scale)),
        ("gaussian-shifted", Gaussian(sigma=1.0), Gaussian(sigma=0.7, p0=0.3, x0=0.5)),
        ("odd-even", odd_gaussian_grid(), Gaussian(sigma=1.0)),
    ]


def run(config: ExperimentConfig) -> ResultTable:
    params, cfg = config.params, config.quadrature
    table = ResultTable(experiment=ExperimentName.symmetry)
    for name, psi, phi in defect_corpus(params):
        for op in OperatorSpec:
            for measure in Measure:
                labels = {"pair": name, "operator": op.value, "measure": measure.value}
                try:
                    defect = symmetry_defect(op, measure, psi, phi, params, cfg)
                    values = {"defect": measured(defect)}
                    if (op, measure) in _SYMMETRIC:
                        values["predicted"] = exact(0.0)
                    elif (op, measure) == (OperatorSpec.x_kmm, Measure.standard):
                        values["predicted"] = measured(kmm_defect_prediction(psi, phi, params, cfg))
                except GupError as exc:
                    table.rows.append(failed_row(labels, exc))
                    continue
                table.rows.append(ResultRow(labels=labels, values=values))
    return table
