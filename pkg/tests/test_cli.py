"""Command-line front end."""

import pytest
from click.testing import CliRunner

from scripts.run import main
from tools.core import InvariantViolation
from tools.harness import read_body, selftest


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


def test_trajectory_command(runner, tmp_path):
    result = runner.invoke(main, ["trajectory", "--out", str(tmp_path), "--set", "t_points=3"])
    assert result.exit_code == 0, result.output
    assert (tmp_path / "trajectory.csv").exists()


def test_env_var_sets_tail_eps(runner, tmp_path):
    result = runner.invoke(
        main,
        ["entropy", "--out", str(tmp_path), "--set", "t_points=2"],
        env={"LOWRES_TAIL_EPS": "1e-10"},
    )
    assert result.exit_code == 0, result.output
    assert "tail_eps: 1.0e-10" in (tmp_path / "entropy.csv").read_text()


def test_repeat_runs_give_identical_bodies(runner, tmp_path):
    for name, threads in (("a", "1"), ("b", "2")):
        args = ["commutator-sweep", "--out", str(tmp_path / name), "--threads", threads]
        assert runner.invoke(main, args).exit_code == 0
    assert read_body(tmp_path / "a" / "commutator_sweep.csv") == read_body(
        tmp_path / "b" / "commutator_sweep.csv"
    )


def test_config_error_exits_with_two(runner, tmp_path, config_file):
    path = config_file("g = 0.1\nbogus = 1\n")
    result = runner.invoke(main, ["trajectory", "--config", str(path), "--out", str(tmp_path)])
    assert result.exit_code == 2


def test_bad_override_exits_with_two(runner, tmp_path):
    result = runner.invoke(main, ["trajectory", "--out", str(tmp_path), "--set", "hbar"])
    assert result.exit_code == 2


def test_unknown_command_is_a_usage_error(runner, tmp_path):
    result = runner.invoke(main, ["plot", "--out", str(tmp_path)])
    assert result.exit_code == 2


def test_transcription_option(runner, tmp_path):
    args = ["trajectory", "--out", str(tmp_path), "--set", "t_points=2"]
    result = runner.invoke(main, [*args, "--transcription", "corrected"])
    assert result.exit_code == 0
    assert "transcription: corrected" in (tmp_path / "trajectory.csv").read_text()


def test_invariant_failure_exits_with_three(runner, tmp_path, monkeypatch):
    def broken(config):
        raise InvariantViolation("revivals", "Parseval", "defect 1e-3")

    monkeypatch.setattr(selftest, "CHECKS", [("revivals", "Parseval", broken)])
    log_file = tmp_path / "run.log"
    result = runner.invoke(main, ["selftest", "--out", str(tmp_path), "--log-file", str(log_file)])
    assert result.exit_code == 3
    assert "Parseval" in log_file.read_text()
