"""CSV artifacts, parallel sweeps and the run entry point."""

import csv
from pathlib import Path

import pytest
import yaml

from tools.core import InvariantViolation
from tools.harness import (
    EXIT_CONFIG,
    EXIT_INVARIANT,
    EXIT_OK,
    EXPERIMENTS,
    RunSpec,
    format_value,
    parallel_map,
    read_body,
    run,
    write_csv,
)
from tools.harness import selftest as selftest_module


def test_format_value():
    assert format_value(0.1) == "0.10000000000000001"
    assert format_value(True) == "true"
    assert format_value(None) == ""
    assert format_value(3) == "3"
    assert float(format_value(1 / 3)) == 1 / 3


def test_write_csv_header_and_body(tmp_path):
    path = write_csv(
        tmp_path / "out" / "demo.csv",
        "demo",
        ["a", "b"],
        [{"a": 1, "b": 0.5}, {"a": 2}],
        {"g": 0.02, "hbar": 1.0},
        notes={"verdict": "z-form"},
    )
    lines = path.read_text().splitlines()
    assert lines[0] == "# demo"
    assert any(line.startswith("# generated: ") for line in lines)
    header = [line[4:] for line in lines if line.startswith("#   ")]
    assert yaml.safe_load("\n".join(header[:2])) == {"g": 0.02, "hbar": 1.0}
    assert lines[-3:] == ["a,b", "1,0.5", "2,"]
    assert "generated" not in read_body(path)
    assert "verdict: z-form" in read_body(path)


def test_parallel_map_keeps_order():
    items = list(range(40))
    assert parallel_map(lambda x: x * x, items, threads=4) == [x * x for x in items]
    assert parallel_map(lambda x: x + 1, [], threads=4) == []


def test_registry_names_every_command():
    assert set(EXPERIMENTS) == {
        "trajectory",
        "hbar-scan",
        "entropy",
        "reduced-density",
        "revivals",
        "cat-fidelity",
        "fig2",
        "commutator-sweep",
        "ehrenfest",
        "schmidt-sweep",
        "selftest",
    }


def test_run_writes_artifacts(tmp_path):
    result = run(RunSpec("trajectory", out_dir=tmp_path, overrides=("t_points=4",)))
    assert result.exit_code == EXIT_OK
    assert result.artifacts == [tmp_path / "trajectory.csv"]
    body = read_body(tmp_path / "trajectory.csv")
    assert body.count("\n") > 8


def test_run_is_deterministic_across_thread_counts(tmp_path):
    first, second = tmp_path / "one", tmp_path / "two"
    run(RunSpec("entropy", out_dir=first, overrides=("t_points=6",), threads=1))
    run(RunSpec("entropy", out_dir=second, overrides=("t_points=6",), threads=3))
    assert read_body(first / "entropy.csv") == read_body(second / "entropy.csv")


def test_run_reports_config_errors(tmp_path, config_file):
    path = config_file("omega1 = 1\ng = 0.1\nfrequency = 3\n")
    result = run(RunSpec("trajectory", config_path=path, out_dir=tmp_path))
    assert result.exit_code == EXIT_CONFIG
    assert f"{path}:3:" in result.message
    assert result.artifacts == []


def test_run_rejects_unknown_command_and_threads(tmp_path):
    assert run(RunSpec("plot", out_dir=tmp_path)).exit_code == EXIT_CONFIG
    assert run(RunSpec("trajectory", out_dir=tmp_path, threads=0)).exit_code == EXIT_CONFIG


def test_run_maps_domain_errors_to_config_exit(tmp_path):
    result = run(RunSpec("cat-fidelity", out_dir=tmp_path, overrides=("g1=0",)))
    assert result.exit_code == EXIT_CONFIG
    assert "domain error" in result.message


def test_run_reports_invariant_failures(tmp_path, monkeypatch):
    def broken(config):
        raise InvariantViolation("fockspace", "unit trace", "trace = 0.9")

    monkeypatch.setattr(selftest_module, "CHECKS", [("fockspace", "unit trace", broken)])
    result = run(RunSpec("selftest", out_dir=tmp_path))
    assert result.exit_code == EXIT_INVARIANT
    assert "fockspace" in result.message
    assert "unit trace" in result.message
    assert result.artifacts == [tmp_path / "selftest.csv"]
    assert "false" in read_body(Path(result.artifacts[0]))


@pytest.mark.parametrize("command", ["cat-fidelity", "commutator-sweep", "schmidt-sweep"])
def test_fixed_sweeps_record_parameters(tmp_path, command):
    result = run(RunSpec(command, out_dir=tmp_path))
    assert result.ok
    for path in result.artifacts:
        assert "#   hbar: 1.0" in path.read_text()


def _rows(path: Path) -> list[dict[str, str]]:
    lines = [line for line in path.read_text().splitlines() if not line.startswith("#")]
    return list(csv.DictReader(lines))


def test_fig2_writes_the_sampled_cat_states(tmp_path):
    result = run(RunSpec("fig2", out_dir=tmp_path))
    assert result.ok
    for name in ("near", "far"):
        path = tmp_path / f"fig2_wavefunction_{name}.csv"
        assert path in result.artifacts
        rows = _rows(path)
        assert list(rows[0]) == ["x", "re", "im", "prob"]
        dx = float(rows[1]["x"]) - float(rows[0]["x"])
        assert sum(float(row["prob"]) for row in rows) * dx == pytest.approx(1.0, abs=1e-9)


def test_reduced_density_writes_the_fock_probabilities(tmp_path):
    result = run(RunSpec("reduced-density", out_dir=tmp_path, overrides=("t_max=0.5",)))
    assert result.ok
    path = tmp_path / "fock_probabilities.csv"
    assert result.artifacts == [tmp_path / "reduced_density.csv", path]
    rows = _rows(path)
    assert list(rows[0]) == ["n", "m", "prob"]
    assert sum(float(row["prob"]) for row in rows) == pytest.approx(1.0, abs=1e-9)
