from collections.abc import Callable

from gupnum.models.experiment import ExperimentConfig, ExperimentName, ResultTable

from . import gram, gup, ml_overlaps, parseval, profiles, symmetry, vacuum

Runner = Callable[[ExperimentConfig], ResultTable]

EXPERIMENTS: dict[ExperimentName, Runner] = {
    ExperimentName.gram: gram.run,
    ExperimentName.parseval: parseval.run,
    ExperimentName.ml_overlaps: ml_overlaps.run,
    ExperimentName.profiles: profiles.run,
    ExperimentName.gup: gup.run,
    ExperimentName.symmetry: symmetry.run,
    ExperimentName.vacuum: vacuum.run,
}

__all__ = ["EXPERIMENTS", "Runner"]
