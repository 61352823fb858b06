"""Classical flow, closed-form expectations and the hbar scan."""

import math

import numpy as np
import pytest

from tools.core import DomainError, InitialConditions, ModelParams, PhaseSpacePoint, Transcription
from tools.dynamics import (
    classical_frequency,
    classical_trajectory,
    compare_transcriptions,
    hbar_scan,
    integrate_classical,
    quantum_expectation,
    quantum_phase_and_amplitude,
    quasi_determinism_conditions,
    rotate,
    trajectory_rows,
)


def test_rotation_is_the_harmonic_flow():
    point = PhaseSpacePoint(1.0, 0.0)
    quarter = rotate(point, math.pi / 2)
    assert quarter.q == pytest.approx(0.0, abs=1e-15)
    assert quarter.p == pytest.approx(-1.0)
    full = rotate(PhaseSpacePoint(0.3, -1.1), 2 * math.pi)
    assert full.q == pytest.approx(0.3)
    assert full.p == pytest.approx(-1.1)


def test_classical_motion_stays_on_energy_shell(kerr_params, kerr_ics):
    for t in np.linspace(0, 50, 11):
        for mode in (1, 2):
            point = classical_trajectory(kerr_params, kerr_ics, float(t), mode).point
            assert point.action == pytest.approx(kerr_ics.action(mode), rel=1e-12)


def test_classical_frequency_depends_on_both_actions(kerr_params):
    ics = InitialConditions(2.0, 0.0, 1.0, 0.0)
    expected = 1.0 + 0.05 * 4.0 + 0.02 * 1.0 / 2
    assert classical_frequency(kerr_params, ics, 1) == pytest.approx(expected)


def test_closed_form_matches_hamilton_integration(kerr_params):
    ics = InitialConditions(1.5, 0.4, -0.8, 1.2)
    times = np.linspace(0.0, 30.0, 16)
    numeric = integrate_classical(kerr_params, ics, times)
    for row, t in zip(numeric, times):
        one = classical_trajectory(kerr_params, ics, float(t), 1)
        two = classical_trajectory(kerr_params, ics, float(t), 2)
        np.testing.assert_allclose(row, [one.q, one.p, two.q, two.p], atol=1e-7)


def test_phase_and_amplitude_at_time_zero(kerr_params, kerr_ics):
    for transcription in Transcription:
        phi, amplitude = quantum_phase_and_amplitude(kerr_params, kerr_ics, 0.0, 1, transcription)
        assert phi == 0.0
        assert amplitude == 1.0


def test_amplitude_contracts(kerr_params, kerr_ics):
    for t in np.linspace(0.1, 20.0, 25):
        for transcription in Transcription:
            _, amplitude = quantum_phase_and_amplitude(
                kerr_params, kerr_ics, float(t), 2, transcription
            )
            assert 0.0 < amplitude <= 1.0


def test_corrected_form_matches_oracle(kerr_params, kerr_ics):
    for t in (0.5, 4.0, 17.0):
        for mode in (1, 2):
            comparison = compare_transcriptions(kerr_params, kerr_ics, t, mode)
            assert comparison.corrected_error < 1e-8


def test_printed_form_departs_from_oracle(kerr_params, kerr_ics):
    comparison = compare_transcriptions(kerr_params, kerr_ics, 10.0, 1)
    assert comparison.printed_error > 1e-2
    assert comparison.printed_error > 1e4 * comparison.corrected_error


def test_expectation_is_scaled_rotation(kerr_params, kerr_ics):
    t = 3.0
    phi, amplitude = quantum_phase_and_amplitude(kerr_params, kerr_ics, t, 1)
    point = quantum_expectation(kerr_params, kerr_ics, t, 1)
    rotated = rotate(kerr_ics.point(1), phi)
    assert point.q == pytest.approx(amplitude * rotated.q)
    assert point.p == pytest.approx(amplitude * rotated.p)


def test_hbar_scan_validation(kerr_params, kerr_ics):
    with pytest.raises(DomainError):
        hbar_scan(kerr_params, kerr_ics, 1.0, [])
    with pytest.raises(DomainError):
        hbar_scan(kerr_params, kerr_ics, 1.0, [1.0, 0.0])


def test_corrected_residual_vanishes_with_hbar():
    params = ModelParams(1.0, 1.0, 0.01, 0.01, 0.02, hbar=1.0)
    ics = InitialConditions(math.sqrt(20.0), 0.0, math.sqrt(20.0), 0.0)
    rows = hbar_scan(params, ics, 1.0, [1.0, 0.1, 0.01, 0.001], 1, Transcription.CORRECTED)
    angles = [abs(row.residual_angle) for row in rows]
    assert angles == sorted(angles, reverse=True)
    assert angles[-1] < 1e-4
    assert [row.hbar for row in rows] == [1.0, 0.1, 0.01, 0.001]


def test_quasi_determinism_regime():
    params = ModelParams(1.0, 1.0, 1e-5, 1e-5, 1e-5, hbar=0.1)
    ics = InitialConditions(math.sqrt(50.0), 0.0, math.sqrt(50.0), 0.0)
    inside = quasi_determinism_conditions(params, ics, 1.0, 1)
    assert inside.satisfied
    assert inside.kerr_ratio == pytest.approx(5e-4)
    assert inside.semiclassical_ratio == pytest.approx(0.002)
    outside = quasi_determinism_conditions(params, ics, 100.0, 1)
    assert not outside.satisfied

    quantum = quantum_expectation(params, ics, 1.0, 1, Transcription.CORRECTED)
    classical = classical_trajectory(params, ics, 1.0, 1)
    assert math.hypot(quantum.q - classical.q, quantum.p - classical.p) < 1e-2


def test_quasi_determinism_empty_mode(kerr_params):
    report = quasi_determinism_conditions(kerr_params, InitialConditions(0, 0, 1, 0), 1.0, 1)
    assert not report.satisfied


def test_trajectory_rows_layout(kerr_params, kerr_ics):
    rows = trajectory_rows(kerr_params, kerr_ics, [0.0, 1.0])
    assert len(rows) == 4
    assert [row["mode"] for row in rows] == [1, 2, 1, 2]
    assert rows[0]["residual_norm"] == pytest.approx(0.0, abs=1e-12)
    columns = {"t", "mode", "q_cl", "p_cl", "q_qm", "p_qm", "A", "phi", "residual_norm"}
    assert set(rows[0]) == columns


def test_frequency_is_the_energy_slope_in_half_action():
    params = ModelParams(omega1=1.1, omega2=0.9, g1=0.05, g2=0.03, g=0.02, hbar=1.0)
    ics = InitialConditions(1.5, -0.4, 2.0, 0.7)

    def energy(h1: float, h2: float) -> float:
        return (
            params.omega1 * h1
            + params.g1 * h1**2
            + params.omega2 * h2
            + params.g2 * h2**2
            + params.g * h1 * h2
        )

    h1, h2 = ics.action(1) / 2, ics.action(2) / 2
    step = 1e-6
    slope1 = (energy(h1 + step, h2) - energy(h1 - step, h2)) / (2 * step)
    slope2 = (energy(h1, h2 + step) - energy(h1, h2 - step)) / (2 * step)
    assert classical_frequency(params, ics, 1) == pytest.approx(slope1, rel=1e-8)
    assert classical_frequency(params, ics, 2) == pytest.approx(slope2, rel=1e-8)
