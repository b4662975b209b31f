"""Gram matrices of the lattice families under both measures."""

from __future__ import annotations

import logging

from gupnum.errors import GupError
from gupnum.experiments.base import exact, failed_row
from gupnum.models.experiment import ExperimentConfig, ExperimentName, Measured, ResultRow, ResultTable
from gupnum.models.lattice import StateFamily
from gupnum.models.params import Measure
from gupnum.numerics.eigenbasis import gram_matrix

logger = logging.getLogger(__name__)

# KMM eigenstates have constant modulus and no finite standard-measure norm.
_DIVERGENT = {(StateFamily.kmm_eigen, Measure.standard)}


def _combinations(config: ExperimentConfig) -> tuple[list[tuple[StateFamily, Measure]], list[str]]:
    families = [config.family] if config.family else list(StateFamily)
    measures = [config.measure] if config.measure else list(Measure)
    combos = [(f, m) for f in families for m in measures]
    notes = []
    if config.family is None or config.measure is None:
        skipped = [c for c in combos if c in _DIVERGENT]
        combos = [c for c in combos if c not in _DIVERGENT]
        notes.extend(
            f"{f.value}/{m.value} skipped: not normalizable; request it explicitly to see the failure"
            for f, m in skipped
        )
    return combos, notes


def run(config: ExperimentConfig) -> ResultTable:
    params, cfg, lattice = config.params, config.quadrature, config.lattice
    combos, notes = _combinations(config)
    table = ResultTable(experiment=ExperimentName.gram, notes=notes)

    for family, measure in combos:
        labels = {"family": family.value, "measure": measure.value, "epsilon": config.epsilon}
        try:
            gram = gram_matrix(lattice, family, measure, params, cfg, seed=config.seed)
        except GupError as exc:
            table.rows.append(failed_row(labels, exc))
            continue

        for i, n in enumerate(lattice.indices):
            for j, n_prime in enumerate(lattice.indices):
                table.rows.append(
                    ResultRow(
                        labels={**labels, "n": n, "n_prime": n_prime},
                        values={
                            "overlap": Measured.of(gram.entries[i, j], gram.errors[i, j], complex_valued=True),
                            "identity": exact(1.0 if i == j else 0.0),
                        },
                    )
                )
        table.notes.append(
            f"{family.value}/{measure.value}: max|G - I| = {gram.deviation_from_identity():.3e}, "
            f"max off-diagonal = {gram.max_off_diagonal():.3e}, "
            f"spot-check deviation = {gram.spot_check_max_deviation:.3e}"
        )
        logger.info(table.notes[-1])
    return table
