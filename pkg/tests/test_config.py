"""Run-configuration parsing and layering."""

import math

import pytest

from tools.core import (
    ALLOWED_KEYS,
    DEFAULTS,
    ConfigError,
    load_run_config,
    parse_config_text,
    parse_overrides,
)


def test_defaults_are_the_oracle_sweep(default_config):
    assert default_config.params.g1 == 0.05
    assert default_config.params.g == 0.02
    assert default_config.ics.action(1) == pytest.approx(8.0)
    assert default_config.tail_eps == 1e-12
    assert len(default_config.times()) == 50
    assert default_config.times()[-1] == pytest.approx(20.0)


def test_parse_key_value_lines():
    text = "# comment\nomega1 = 2.0\n\ng = 0.1   # inline\nhbar=0.5\n"
    assert parse_config_text(text) == {"omega1": 2.0, "g": 0.1, "hbar": 0.5}


def test_unknown_key_reports_line(config_file):
    path = config_file("omega1 = 1\ng = 0.1\nfrequency = 3\n")
    with pytest.raises(ConfigError) as info:
        load_run_config(path)
    assert info.value.line == 3
    assert "unknown key 'frequency'" in info.value.reason
    assert str(path) in str(info.value)


@pytest.mark.parametrize(
    "text, line",
    [
        ("g = 0.1\ng = 0.2\n", 2),
        ("omega1 1.0\n", 1),
        ("g1 = fast\n", 1),
        ("hbar = 0\n", 1),
        ("mass = -1\n", 1),
        ("tail_eps = 1.5\n", 1),
        ("t_points = 2.5\n", 1),
        ("g = nan\n", 1),
    ],
)
def test_malformed_configs(text, line):
    with pytest.raises(ConfigError) as info:
        parse_config_text(text)
    assert info.value.line == line


def test_yaml_config(config_file):
    path = config_file("g: 0.0\nq10: 2.0\nt_points: 5\n", name="run.yaml")
    config = load_run_config(path)
    assert config.params.g == 0.0
    assert config.ics.q10 == 2.0
    assert config.t_points == 5


def test_yaml_rejects_unknown_keys(config_file):
    path = config_file("coupling: 0.1\n", name="run.yml")
    with pytest.raises(ConfigError, match="unknown key"):
        load_run_config(path)


def test_missing_file_is_a_config_error(tmp_path):
    with pytest.raises(ConfigError, match="cannot read config"):
        load_run_config(tmp_path / "absent.cfg")


def test_overrides_and_tail_eps_take_precedence(config_file):
    path = config_file("g = 0.1\ntail_eps = 1e-10\n")
    config = load_run_config(path, overrides=["g=0.3"], tail_eps=1e-8)
    assert config.params.g == 0.3
    assert config.tail_eps == 1e-8
    assert config.source == str(path)


@pytest.mark.parametrize("item", ["g", "nokey=1", "hbar=-2"])
def test_bad_overrides(item):
    with pytest.raises(ConfigError) as info:
        parse_overrides([item])
    assert info.value.path == "<overrides>"


def test_as_dict_covers_every_key(default_config):
    data = default_config.as_dict()
    assert set(data) == set(ALLOWED_KEYS)
    assert data["q10"] == pytest.approx(math.sqrt(8.0))
    assert set(DEFAULTS) == set(ALLOWED_KEYS)
