"""Shared fixtures: the oscillator configuration used across the suite."""

import math

import pytest
from hypothesis import settings

from tools.core import InitialConditions, ModelParams, RunConfig, build_run_config

settings.register_profile("deterministic", derandomize=True, max_examples=50, deadline=None)
settings.load_profile("deterministic")


@pytest.fixture
def kerr_params() -> ModelParams:
    """omega = 1, g_k = 0.05, g = 0.02, hbar = 1."""
    return ModelParams(omega1=1.0, omega2=1.0, g1=0.05, g2=0.05, g=0.02, hbar=1.0)


@pytest.fixture
def kerr_ics() -> InitialConditions:
    """|z1|^2 = |z2|^2 = 4 at hbar = 1."""
    return InitialConditions(q10=math.sqrt(8.0), p10=0.0, q20=math.sqrt(8.0), p20=0.0)


@pytest.fixture
def default_config() -> RunConfig:
    return build_run_config({})


@pytest.fixture
def config_file(tmp_path):
    """Write a `key = value` config and return its path."""

    def write(text: str, name: str = "run.cfg"):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return write
