"""Truncated number-basis oracle."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import special

from tools.core import (
    DomainError,
    InitialConditions,
    InvariantViolation,
    ModelParams,
    derive_amplitudes,
)
from tools.fockspace import (
    DensityMatrix,
    JointFockState,
    coherent_coefficients,
    density_operator_phase,
    dump_probabilities,
    evolve,
    ladder_expectation,
    level_frequencies,
    linear_entropy,
    observables,
    poisson_weights,
    purity,
    reduce,
    truncation_bound,
)


@given(
    mean=st.floats(min_value=0.01, max_value=200.0),
    eps=st.floats(min_value=1e-14, max_value=1e-2),
)
def test_truncation_bound_is_the_smallest_cutoff(mean, eps):
    N = truncation_bound(mean, eps)
    assert special.pdtrc(N - 1, mean) < eps
    if N > 1:
        assert special.pdtrc(N - 2, mean) >= eps


def test_truncation_bound_edge_cases():
    assert truncation_bound(0.0, 1e-12) == 1
    with pytest.raises(DomainError):
        truncation_bound(-1.0)
    with pytest.raises(DomainError):
        truncation_bound(4.0, 0.0)
    with pytest.raises(DomainError):
        truncation_bound(4.0, 1.0)


def test_coherent_coefficients_follow_poisson():
    z = 1.5 * np.exp(0.3j)
    count = truncation_bound(abs(z) ** 2, 1e-14)
    coeffs = coherent_coefficients(z, count)
    np.testing.assert_allclose(np.abs(coeffs) ** 2, poisson_weights(abs(z) ** 2, count), rtol=1e-12)
    assert np.sum(np.abs(coeffs) ** 2) == pytest.approx(1.0, abs=1e-13)
    assert np.angle(coeffs[1]) == pytest.approx(0.3)


def test_evolved_norm_stays_within_tail(kerr_params, kerr_ics):
    for t in (0.0, 3.7, 20.0):
        state = evolve(kerr_params, kerr_ics, t, 1e-12)
        assert 1.0 - 1e-12 - 1e-12 <= state.norm() <= 1.0 + 1e-12


def test_observables_at_time_zero_match_initial_point(kerr_params):
    ics = InitialConditions(1.2, -0.7, 2.0, 0.5)
    obs = observables(evolve(kerr_params, ics, 0.0), kerr_params)
    np.testing.assert_allclose(obs, [1.2, -0.7, 2.0, 0.5], atol=1e-10)


def test_reduced_purities_agree(kerr_params, kerr_ics):
    state = evolve(kerr_params, kerr_ics, 11.0)
    rho1, rho2 = reduce(state, 1), reduce(state, 2)
    rho1.check_positive()
    rho2.check_positive()
    assert purity(rho1) == pytest.approx(purity(rho2), abs=1e-10)
    assert 0.0 < linear_entropy(rho1) < 1.0


def test_decoupled_modes_stay_pure(kerr_params, kerr_ics):
    state = evolve(kerr_params.with_values(g=0.0), kerr_ics, 13.0)
    assert linear_entropy(reduce(state, 1)) == pytest.approx(0.0, abs=1e-11)


def test_level_frequencies_reproduce_density_operator_phase(kerr_params):
    t = 0.37
    freqs = level_frequencies(kerr_params, 30, 30)
    rng = np.random.default_rng(7)
    for n, m, n2, m2 in rng.integers(0, 30, size=(50, 4)):
        expected = np.exp(-1j * (freqs[n, m] - freqs[n2, m2]) * t)
        phase = density_operator_phase(kerr_params, t, int(n), int(m), int(n2), int(m2))
        assert abs(phase - expected) < 1e-11


def test_joint_state_rejects_bad_norm():
    with pytest.raises(InvariantViolation) as info:
        JointFockState(coeffs=np.ones((2, 2)), t=0.0, eps_tail=1e-12)
    assert info.value.invariant == "truncated norm"


def test_density_matrix_rejects_non_hermitian():
    with pytest.raises(InvariantViolation) as info:
        DensityMatrix(np.array([[0.5, 0.1], [0.0, 0.5]]))
    assert info.value.invariant == "hermiticity"


def test_density_matrix_positivity_check():
    rho = DensityMatrix(np.array([[0.5, 0.6], [0.6, 0.5]]))
    with pytest.raises(InvariantViolation):
        rho.check_positive()
    assert rho.max_offdiagonal() == pytest.approx(0.6)


def test_dump_probabilities_rows(kerr_params, kerr_ics):
    state = evolve(kerr_params, kerr_ics, 1.0)
    rows = dump_probabilities(state)
    assert len(rows) == state.N1 * state.N2
    assert sum(row["prob"] for row in rows) == pytest.approx(state.norm())


def test_evolve_rejects_non_finite_time(kerr_params, kerr_ics):
    with pytest.raises(DomainError):
        evolve(kerr_params, kerr_ics, float("inf"))


@pytest.mark.parametrize("t", [0.0, 1.3, 17.0])
def test_uncoupled_harmonic_modes_rotate_rigidly(t):
    params = ModelParams(omega1=1.3, omega2=0.7, g1=0.0, g2=0.0, g=0.0, hbar=1.0)
    ics = InitialConditions(1.2, -0.7, 2.0, 0.5)
    amplitudes = derive_amplitudes(ics, params)
    state = evolve(params, ics, t)
    expected1 = amplitudes.z10 * np.exp(-1j * params.omega1 * t)
    expected2 = amplitudes.z20 * np.exp(-1j * params.omega2 * t)
    assert abs(ladder_expectation(state, 1) - expected1) < 1e-9
    assert abs(ladder_expectation(state, 2) - expected2) < 1e-9
