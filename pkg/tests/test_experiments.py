import pytest

from gupnum.experiments import EXPERIMENTS
from gupnum.models.experiment import ExperimentConfig, ExperimentName, RowStatus


def run(name: str, **overrides):
    config = ExperimentConfig(experiment=name, **overrides)
    return EXPERIMENTS[config.experiment](config)


def test_every_experiment_has_a_runner() -> None:
    assert set(EXPERIMENTS) == set(ExperimentName)


def test_symmetry_defects_match_predictions() -> None:
    table = run("symmetry")
    assert len(table.rows) == 3 * 5 * 2
    assert table.failed_rows == 0
    predicted = [row for row in table.rows if "predicted" in row.values]
    assert len(predicted) == 3 * 9
    for row in predicted:
        defect, expected = row.values["defect"], row.values["predicted"]
        assert defect.value == pytest.approx(expected.value, abs=1e-8)
        assert (defect.imag or 0.0) == pytest.approx(expected.imag or 0.0, abs=1e-8)


def test_gup_sweep_respects_the_bound() -> None:
    table = run("gup", sigmas=[0.5, 1.0, 3.0])
    assert [row.labels["state"] for row in table.rows] == ["maxloc", "gaussian", "gaussian", "gaussian"]
    for row in table.rows:
        assert row.values["slack"].value >= -1e-9
    assert abs(table.rows[0].values["slack"].value) <= 1e-8
    assert table.notes[0].startswith("smallest lhs - rhs")


def test_profiles_skip_the_singularity() -> None:
    table = run("profiles", x_min=-1.0, x_max=1.0, x_count=5, rel_tol=1e-9, abs_tol=1e-10)
    states = [row.labels["state"] for row in table.rows]
    assert states.count("sym-eigen") == 4
    assert states.count("maxloc") == 5
    assert any(note.startswith("sym-eigen: skipped x = 0") for note in table.notes)
    assert any(note.startswith("maxloc plancherel norm") for note in table.notes)
    for row in table.rows:
        assert row.status is RowStatus.ok
        assert row.values["exact_rel_dev"].value <= 1e-6
        assert row.values["gap"].value <= 1e-8


def test_profiles_show_the_linearization_gap_off_center() -> None:
    table = run("profiles", state="maxloc", xi=4.0, x_min=3.0, x_max=5.0, x_count=3, rel_tol=1e-9, abs_tol=1e-10)
    assert [row.labels["x"] for row in table.rows] == [3.0, 4.0, 5.0]
    for row in table.rows:
        assert row.status is RowStatus.ok
        assert row.values["gap"].value > 1e-3


def test_parseval_rows_follow_truncations() -> None:
    table = run("parseval", epsilon=1.0, truncations=[100, 10])
    assert [row.labels["N"] for row in table.rows] == [10, 100]
    first = table.rows[0].values
    assert first["eigen_sum"].value == pytest.approx(0.980671, abs=1e-6)
    assert first["eigen_deficit"].value <= first["deficit_bound"].value
    assert first["ml_sum"].value == pytest.approx(1.0, abs=1e-14)
    assert table.notes == []
