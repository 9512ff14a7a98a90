from nhbath.config import (
    ConfigUpdate, Experiment, ExperimentConfig, Severity, parse_overrides, parse_value,
    prefab_config, read_config_from_toml, resolve_config, validate)
from nhbath.disorder import DisorderKind
from nhbath.model import Boundary, Sublattice
from nhbath.errors.user import (
    FileError, HelpfulUserError, MissingKeyError, UnknownExperiment, UserError)

from pathlib import Path
from contextlib import chdir

import pytest
import logging


dressed_toml = """
experiment = "dressed"
J1 = 0.6
attach = "b"
unit_cell = 12
delta_grid = [[0.0, -0.6], [0.5, -0.6]]
""".lstrip()


def test_defaults():
    cfg = ExperimentConfig()
    assert cfg.experiment is None
    assert cfg.emitter().unit_cell == 20
    assert cfg.second_emitter().unit_cell == 40
    assert cfg.bath(L=10).L == 10
    assert cfg.delta == 0j


def test_layering():
    cfg = ExperimentConfig() | ConfigUpdate(L=10, gamma=1.2) | None | ConfigUpdate(L=12)
    assert cfg.L == 12
    assert cfg.gamma == 1.2
    assert cfg.delta == -0.6j
    assert cfg.J1 == 1.6


def test_presets():
    cfg = resolve_config("fig3")
    assert cfg.experiment is Experiment.FIG3
    assert (cfg.L, cfg.unit_cell, cfg.gamma) == (20, 10, 1.2)
    assert cfg.delta0_grid == (0.0, 0.2, 3.0)
    assert cfg.output_dir == "nhbath-fig3"

    cfg = resolve_config("figS3")
    assert cfg.disorder_kind == (DisorderKind.DIAGONAL, DisorderKind.OFF_DIAGONAL)
    assert cfg.V_grid[-1] == 2.0
    assert cfg.n_realizations == 1000

    assert Experiment.SPECTRUM not in prefab_config
    assert resolve_config("spectrum") == ExperimentConfig(experiment=Experiment.SPECTRUM)


def test_overrides():
    cfg = resolve_config("fig5", ["--L=60", "--boundary=pbc", "--output=out", "--J1_grid=[1, 2.5]"])
    assert cfg.L == 60
    assert cfg.boundary is Boundary.PBC
    assert cfg.output_dir == "out"
    assert cfg.J1_grid == (1.0, 2.5)
    assert cfg.unit_cell2 == 55

    assert resolve_config("fig5", ["--experiment=fig3"]).experiment is Experiment.FIG3


def test_parse_value():
    assert parse_value("1.5") == 1.5
    assert parse_value("3") == 3
    assert parse_value("true") is True
    assert parse_value("[0.1, 0.2]") == [0.1, 0.2]
    assert parse_value("obc") == "obc"


def test_bad_overrides():
    with pytest.raises(HelpfulUserError):
        parse_overrides(["--not_a_key=1"])
    with pytest.raises(HelpfulUserError):
        parse_overrides(["--L"])
    with pytest.raises(HelpfulUserError):
        parse_overrides(["--L=many"])


def test_config_file(tmp_path: Path, caplog):
    (tmp_path / "run.toml").write_text(dressed_toml, encoding="utf-8")
    with chdir(tmp_path):
        with caplog.at_level(logging.DEBUG):
            cfg = resolve_config("run.toml", ["--L=30"])
        assert "run.toml" in caplog.text

    assert cfg.experiment is Experiment.DRESSED
    assert cfg.attach is Sublattice.B
    assert cfg.emitter().unit_cell == 12
    assert cfg.L == 30
    assert cfg.delta_grid == ((0.0, -0.6), (0.5, -0.6))


def test_config_errors(tmp_path: Path):
    with chdir(tmp_path):
        Path("empty.toml").write_text("J1 = 1.0\n", encoding="utf-8")
        with pytest.raises(MissingKeyError) as e:
            resolve_config("empty.toml")
        assert "experiment" in str(e.value)

        Path("typo.toml").write_text("experiment = \"dressed\"\nJ3 = 1.0\n", encoding="utf-8")
        with pytest.raises(HelpfulUserError):
            resolve_config("typo.toml")

        Path("broken.toml").write_text("experiment = \n", encoding="utf-8")
        with pytest.raises(HelpfulUserError):
            read_config_from_toml(Path("broken.toml"))

        with pytest.raises(FileError):
            resolve_config("missing.toml")
        with pytest.raises(UnknownExperiment):
            resolve_config("fig6")
        with pytest.raises(UserError):
            resolve_config("fig3", ["--experiment=fig6"])


def severities(cfg: ExperimentConfig) -> list[tuple[Severity, str]]:
    return [(d.severity, d.key) for d in validate(cfg)]


def test_validate_presets():
    for experiment in prefab_config:
        diagnostics = validate(resolve_config(str(experiment)))
        assert all(d.severity is not Severity.ERROR for d in diagnostics), experiment
    assert validate(resolve_config("fig5")) == []
    assert validate(resolve_config("fig3")) == []


def test_validate_transition():
    assert severities(resolve_config("spectrum")) == [(Severity.INFO, "J1")]
    assert severities(resolve_config("spectrum", ["--J1=1.6005"])) == [(Severity.WARNING, "J1")]
    assert severities(resolve_config("spectrum", ["--J1=2.5"])) == []
    # the open chain is regular on the transition line
    assert severities(resolve_config("dressed")) == []


def test_validate_warnings():
    assert severities(resolve_config("dressed", ["--J1=0.6"])) == [(Severity.WARNING, "J1")]
    assert severities(resolve_config("fig5", ["--gamma=0.2"])) == [(Severity.WARNING, "gamma")]


def test_validate_errors():
    assert (Severity.ERROR, "unit_cell2") in severities(resolve_config("fig5", ["--unit_cell2=45"]))
    assert Severity.ERROR in [s for s, _ in severities(resolve_config("dressed", ["--unit_cell=41"]))]
    assert severities(resolve_config("gbz", ["--J1=2.5"])) == [
        (Severity.ERROR, "J1_grid"), (Severity.ERROR, "kappa_grid")]
    assert (Severity.ERROR, "V_grid") in severities(resolve_config("disorder", ["--V_grid=[-1.0]"]))
    assert (Severity.ERROR, "threads") in severities(resolve_config("bound", ["--threads=0"]))
