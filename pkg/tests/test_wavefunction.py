"""Position-space states and their sampling."""

import math

import numpy as np
import pytest

from tools.core import DomainError, PositionGrid
from tools.wavefunction import (
    SampledWavefunction,
    WavefunctionKind,
    WavefunctionSpec,
    cat_normalization,
    cat_xrep,
    coherent_xrep,
    component_overlap,
    evaluate,
    incoherent_xrep,
    number_xrep,
    peak_positions,
    reference_grid,
    sample,
    wavefunction_rows,
)


def cat(q: float, lam: float = 0.2, b: float = 1.0) -> WavefunctionSpec:
    return WavefunctionSpec(WavefunctionKind.CAT, b=b, q=q, lam=lam)


@pytest.mark.parametrize("q", [0.0, 1.0, 3.0])
def test_cat_is_normalized_and_mirror_symmetric(q):
    spec = cat(q)
    grid = reference_grid(spec)
    values = cat_xrep(spec, grid.centers)
    assert grid.dx * np.sum(np.abs(values) ** 2) == pytest.approx(1.0, abs=1e-9)
    np.testing.assert_allclose(np.abs(cat_xrep(spec, -grid.centers)), np.abs(values), atol=1e-12)


def test_component_overlap():
    spec = cat(2.0, lam=0.5)
    assert component_overlap(spec) == pytest.approx(math.exp(-1.0 - 4.0))
    assert cat_normalization(spec) == pytest.approx(math.sqrt(2 * (1 + math.exp(-5.0))))


def test_degenerate_cat_is_the_coherent_state():
    spec = WavefunctionSpec(WavefunctionKind.CAT, b=1.0, q=0.0, lam=math.inf)
    x = np.linspace(-4, 4, 17)
    assert cat_normalization(spec) == pytest.approx(2.0)
    np.testing.assert_allclose(cat_xrep(spec, x), coherent_xrep(spec, x))


def test_coherent_peak_and_phase():
    spec = WavefunctionSpec(WavefunctionKind.COHERENT, b=0.5, q=2.0, lam=0.25)
    assert peak_positions(spec) == (1.0,)
    value = coherent_xrep(spec, np.array([1.0, 1.1]))
    assert abs(value[0]) == pytest.approx((0.5 * math.sqrt(math.pi)) ** -0.5)
    assert np.angle(value[1]) == pytest.approx(0.4)


def test_incoherent_mixture_has_no_fringes():
    spec = cat(1.0)
    x = np.linspace(-0.5, 0.5, 101)
    mixture = incoherent_xrep(spec, x)
    assert np.all(np.diff(mixture[:50]) > 0)
    grid = reference_grid(spec)
    assert grid.dx * np.sum(incoherent_xrep(spec, grid.centers)) == pytest.approx(1.0, abs=1e-9)


def test_number_states_are_orthonormal():
    grid = PositionGrid.symmetric(1e-3, 16.0)
    table = np.array([number_xrep(n, 1.0, grid.centers) for n in range(12)])
    np.testing.assert_allclose(grid.dx * table @ table.T, np.eye(12), atol=1e-9)


def test_ground_state_is_the_centered_coherent_state():
    x = np.linspace(-3, 3, 13)
    ground = number_xrep(0, 1.3, x)
    coherent = coherent_xrep(WavefunctionSpec(WavefunctionKind.COHERENT, b=1.3), x)
    np.testing.assert_allclose(ground, coherent.real, atol=1e-15)
    assert np.all(coherent.imag == 0)


def test_number_state_parity_and_peaks():
    x = np.linspace(0.1, 3, 7)
    np.testing.assert_allclose(number_xrep(3, 1.0, -x), -number_xrep(3, 1.0, x))
    spec = WavefunctionSpec(WavefunctionKind.NUMBER, b=2.0, n=4)
    assert peak_positions(spec) == pytest.approx((-6.0, 6.0))
    assert evaluate(spec, x).dtype == complex


@pytest.mark.parametrize(
    "kwargs",
    [
        {"kind": WavefunctionKind.CAT, "b": 0.0},
        {"kind": WavefunctionKind.CAT, "b": 1.0, "lam": 0.0},
        {"kind": WavefunctionKind.COHERENT, "b": 1.0, "q": math.nan},
        {"kind": WavefunctionKind.NUMBER, "b": 1.0, "n": -1},
    ],
)
def test_spec_validation(kwargs):
    with pytest.raises(DomainError):
        WavefunctionSpec(**kwargs)


def test_sample_requires_coverage():
    spec = cat(3.0)
    with pytest.raises(DomainError, match="does not cover"):
        sample(spec, PositionGrid.symmetric(0.01, 5.0))


def test_sample_is_normalized():
    spec = cat(3.0)
    psi = sample(spec, PositionGrid.symmetric(0.05, 12.0))
    psi.require_normalized()
    assert psi.norm() == pytest.approx(1.0, abs=1e-12)


def test_sampled_wavefunction_validation():
    grid = PositionGrid.symmetric(0.5, 1.0)
    with pytest.raises(DomainError):
        SampledWavefunction(grid, np.zeros(2, dtype=complex))
    with pytest.raises(DomainError):
        SampledWavefunction(grid, np.zeros(grid.count, dtype=complex)).normalized()
    with pytest.raises(DomainError):
        SampledWavefunction(grid, np.ones(grid.count, dtype=complex)).require_normalized()


def test_wavefunction_rows():
    psi = sample(cat(1.0), PositionGrid.symmetric(0.5, 12.0))
    rows = wavefunction_rows(psi)
    assert len(rows) == psi.grid.count
    assert set(rows[0]) == {"x", "re", "im", "prob"}
    assert sum(row["prob"] for row in rows) * psi.grid.dx == pytest.approx(1.0)
