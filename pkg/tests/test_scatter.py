"""Single-interface solver: frequencies, wave vectors, amplitudes, coefficients."""

import cmath
import math

import hypothesis as hyp
import hypothesis.strategies as st
import numpy as np
import pytest
from numpy.testing import assert_allclose

from timescatter import (
    ConsistencyError,
    DegenerateCaseError,
    DomainError,
    FrequencyConvention,
    MediumState,
    NoSolutionError,
    PlaneWave,
    TemporalProfile,
    amplitudes,
    boundary_residual,
    coefficients,
    degenerate_amplitude,
    frequencies,
    phase_vector,
    scatter_interface,
    swapped_coefficients,
    transversality_residual,
    wave_vectors,
)

X_HAT = np.array([1.0, 0.0, 0.0])
Y_HAT = np.array([0.0, 1.0, 0.0])

VACUUM = MediumState(1, 1)
DENSE_EPS = MediumState(4, 1)
DENSE_MU = MediumState(1, 4)


def incident_wave(amplitude=None, omega=1.0, k=X_HAT, medium=VACUUM):
    amp = Y_HAT.astype(complex) if amplitude is None else np.asarray(amplitude, complex)
    return PlaneWave(amp, omega, k, medium.wave_speed)


def random_media_pair(rng):
    draw = lambda: 10.0 ** rng.uniform(-1, 1)
    return MediumState(draw(), draw()), MediumState(draw(), draw())


class TestFrequencies:
    def test_slowdown_halves_frequency(self):
        assert frequencies(1.0, 1.0, 0.5) == (-0.5, 0.5)

    def test_identical_media(self):
        assert frequencies(1.0, 1.0, 1.0) == (-1.0, 1.0)

    def test_speedup(self):
        assert frequencies(2.0, 0.5, 1.0) == (-4.0, 4.0)

    def test_backward_convention(self):
        conv = FrequencyConvention(transmitted="backward")
        assert frequencies(1.0, 1.0, 0.5, conv) == (0.5, -0.5)

    def test_positive_reflected_convention(self):
        conv = FrequencyConvention(reflected="positive")
        assert frequencies(1.0, 1.0, 0.5, conv) == (0.5, 0.5)

    def test_preconditions(self):
        with pytest.raises(DomainError):
            frequencies(-1.0, 1.0, 0.5)
        with pytest.raises(DomainError):
            frequencies(1.0, 0.0, 0.5)

    def test_no_total_internal_reflection(self):
        rng = np.random.default_rng(3)
        for _ in range(200):
            before, after = random_media_pair(rng)
            omega2, omega3 = frequencies(1.0, before.wave_speed, after.wave_speed)
            assert math.isfinite(omega2) and math.isfinite(omega3)
            assert omega3 > 0.0


class TestWaveVectors:
    def test_default_branch(self):
        k_r, k_t = wave_vectors(X_HAT, 1.0, -0.5, 0.5, 1.0, 0.5)
        assert_allclose(k_t, X_HAT)
        assert_allclose(k_r, -X_HAT)

    def test_flipped_branch(self):
        k_r, k_t = wave_vectors(X_HAT, 1.0, 0.5, -0.5, 1.0, 0.5)
        assert_allclose(k_t, -X_HAT)
        assert_allclose(k_r, X_HAT)

    def test_negative_index_transmission(self):
        k_r, k_t = wave_vectors(X_HAT, 1.0, -0.5, 0.5, 1.0, -0.5)
        assert_allclose(k_t, -X_HAT)

    def test_inconsistent_inputs_rejected(self):
        with pytest.raises(ConsistencyError):
            wave_vectors(X_HAT, 1.0, -0.7, 0.7, 1.0, 0.5)


class TestAmplitudes:
    def test_worked_example(self):
        B_i = Y_HAT.astype(complex)
        B_r, B_t = amplitudes(B_i, 1.0, -0.5, 0.5, 1.0, 4.0)
        assert_allclose(B_r, -0.125 * B_i, rtol=1e-15)
        assert_allclose(B_t, 0.375 * B_i, rtol=1e-15)

    def test_identical_media_identity(self):
        B_i = Y_HAT.astype(complex)
        B_r, B_t = amplitudes(B_i, 1.0, -1.0, 1.0, 1.0, 1.0)
        assert_allclose(B_r, np.zeros(3), atol=1e-15)
        assert_allclose(B_t, B_i, rtol=1e-15)

    def test_mu_only_jump(self):
        B_i = Y_HAT.astype(complex)
        B_r, B_t = amplitudes(B_i, 1.0, -0.5, 0.5, 1.0, 1.0)
        assert_allclose(B_r, 0.25 * B_i, rtol=1e-15)
        assert_allclose(B_t, 0.75 * B_i, rtol=1e-15)

    def test_degenerate_frequencies_rejected(self):
        with pytest.raises(DegenerateCaseError):
            amplitudes(Y_HAT.astype(complex), 1.0, 0.5, 0.5, 1.0, 4.0)

    def test_amplitude_sum_identity(self):
        rng = np.random.default_rng(11)
        for _ in range(300):
            before, after = random_media_pair(rng)
            omega1 = 10.0 ** rng.uniform(-1, 1)
            omega2, omega3 = frequencies(omega1, before.wave_speed, after.wave_speed)
            B_i = rng.normal(size=3) + 1j * rng.normal(size=3)
            B_r, B_t = amplitudes(B_i, omega1, omega2, omega3, before.epsilon, after.epsilon)
            expected = (before.epsilon / after.epsilon) * B_i
            assert_allclose(B_r + B_t, expected, rtol=1e-12)

    def test_outputs_parallel_to_input(self):
        # No component along k_i is ever added to the scattered amplitudes.
        rng = np.random.default_rng(12)
        B_i = rng.normal(size=3) + 1j * rng.normal(size=3)
        B_r, B_t = amplitudes(B_i, 1.0, -0.5, 0.5, 1.0, 4.0)
        assert_allclose(np.cross(B_r, B_i), np.zeros(3), atol=1e-14)
        assert_allclose(np.cross(B_t, B_i), np.zeros(3), atol=1e-14)

    @hyp.settings(max_examples=50, deadline=None)
    @hyp.given(
        scale_re=st.floats(min_value=-5, max_value=5),
        scale_im=st.floats(min_value=-5, max_value=5),
    )
    def test_scale_invariance(self, scale_re, scale_im):
        scale = complex(scale_re, scale_im)
        hyp.assume(abs(scale) > 1e-6)
        B_i = Y_HAT.astype(complex)
        B_r, B_t = amplitudes(B_i, 1.0, -0.5, 0.5, 1.0, 4.0)
        B_r2, B_t2 = amplitudes(scale * B_i, 1.0, -0.5, 0.5, 1.0, 4.0)
        assert_allclose(B_r2, scale * B_r, rtol=1e-12)
        assert_allclose(B_t2, scale * B_t, rtol=1e-12)


class TestDegenerateAmplitude:
    def test_compatible_case(self):
        B_i = Y_HAT.astype(complex)
        combined = degenerate_amplitude(B_i, 1.0, 2.0, 2.0, 1.0)
        assert_allclose(combined, 2.0 * B_i, rtol=1e-15)

    def test_incompatible_case(self):
        with pytest.raises(NoSolutionError):
            degenerate_amplitude(Y_HAT.astype(complex), 1.0, 2.0, 1.0, 1.0)

    def test_identity_medium(self):
        B_i = np.array([0.3 + 0.4j, 1.0, -0.2j])
        assert_allclose(degenerate_amplitude(B_i, 1.0, 1.0, 1.0, 1.0), B_i)


class TestCoefficients:
    def test_eps_jump(self):
        R, T, total = coefficients(VACUUM, DENSE_EPS)
        assert R == pytest.approx(0.125, abs=1e-15)
        assert T == pytest.approx(0.375, abs=1e-15)
        assert total == pytest.approx(0.5, abs=1e-15)

    def test_mu_jump(self):
        R, T, total = coefficients(VACUUM, DENSE_MU)
        assert R == pytest.approx(0.25, abs=1e-15)
        assert T == pytest.approx(0.75, abs=1e-15)
        assert total == pytest.approx(1.0, abs=1e-15)

    def test_identical_media(self):
        assert coefficients(VACUUM, MediumState(1, 1)) == (0.0, 1.0, 1.0)

    def test_swapped_roles(self):
        assert swapped_coefficients(VACUUM, DENSE_EPS) == pytest.approx((0.375, 0.125))
        assert swapped_coefficients(VACUUM, MediumState(1, 1)) == (1.0, 0.0)
        assert swapped_coefficients(VACUUM, DENSE_MU) == pytest.approx((0.75, 0.25))

    def test_energy_sum_identity(self):
        rng = np.random.default_rng(5)
        for _ in range(300):
            before, after = random_media_pair(rng)
            R, T, total = coefficients(before, after)
            z1, z2 = before.impedance, after.impedance
            if z1 < z2:
                expected = before.epsilon / after.epsilon
            else:
                expected = math.sqrt(
                    before.epsilon * before.mu / (after.epsilon * after.mu)
                )
            assert total == pytest.approx(expected, rel=1e-12)


class TestScatterInterface:
    def test_worked_example_end_to_end(self):
        result = scatter_interface(incident_wave(), TemporalProfile.step(VACUUM, DENSE_EPS))
        assert result.omega3 == 0.5
        assert result.omega2 == -0.5
        assert_allclose(result.transmitted.k, X_HAT)
        assert_allclose(result.reflected.k, -X_HAT)
        assert result.R == pytest.approx(0.125, abs=1e-15)
        assert result.T == pytest.approx(0.375, abs=1e-15)
        assert not result.degenerate

    def test_identical_media_transmits_identically(self):
        result = scatter_interface(incident_wave(), TemporalProfile.step(VACUUM, MediumState(1, 1)))
        assert result.R == 0.0
        assert result.reflected is None
        assert_allclose(result.transmitted.amplitude, result.incident.amplitude)
        assert result.transmitted.omega == result.incident.omega
        assert_allclose(result.transmitted.k, result.incident.k)

    def test_interface_time_only_changes_phases(self):
        res0 = scatter_interface(incident_wave(), TemporalProfile.step(VACUUM, DENSE_EPS, t0=0.0))
        res1 = scatter_interface(incident_wave(), TemporalProfile.step(VACUUM, DENSE_EPS, t0=1.0))
        assert res1.R == pytest.approx(res0.R, rel=1e-15)
        assert res1.T == pytest.approx(res0.T, rel=1e-15)
        # A amplitudes pick up exactly the interface phase factors: B scales
        # with exp(-i*omega1*t0) through B_i, and A = B * exp(+i*omega*t0).
        omega1 = res0.incident.omega
        assert_allclose(
            res1.reflected.amplitude,
            res0.reflected.amplitude * cmath.exp(1j * (res0.omega2 - omega1) * 1.0),
            rtol=1e-12,
        )
        assert_allclose(
            res1.transmitted.amplitude,
            res0.transmitted.amplitude * cmath.exp(1j * (res0.omega3 - omega1) * 1.0),
            rtol=1e-12,
        )
        # B moduli are t0-independent.
        assert np.linalg.norm(res1.B_reflected) == pytest.approx(
            np.linalg.norm(res0.B_reflected), rel=1e-12
        )

    def test_phase_vectors_all_equal(self):
        rng = np.random.default_rng(21)
        for _ in range(100):
            before, after = random_media_pair(rng)
            k = rng.normal(size=3)
            k /= np.linalg.norm(k)
            raw = rng.normal(size=3) + 1j * rng.normal(size=3)
            amp = raw - np.dot(raw, k) * k
            wave = PlaneWave(amp, 10.0 ** rng.uniform(-0.5, 0.5), k, before.wave_speed)
            result = scatter_interface(wave, TemporalProfile.step(before, after))
            m_i = phase_vector(result.incident).m
            assert_allclose(phase_vector(result.reflected).m, m_i, rtol=1e-12, atol=1e-12)
            assert_allclose(phase_vector(result.transmitted).m, m_i, rtol=1e-12, atol=1e-12)
            assert transversality_residual(result.reflected) <= 1e-12 * np.linalg.norm(
                result.reflected.amplitude
            )
            assert transversality_residual(result.transmitted) <= 1e-12 * np.linalg.norm(
                result.transmitted.amplitude
            )

    def test_scale_invariance_of_result(self):
        scale = 0.7 - 1.3j
        res1 = scatter_interface(incident_wave(), TemporalProfile.step(VACUUM, DENSE_EPS))
        res2 = scatter_interface(
            incident_wave(amplitude=scale * Y_HAT), TemporalProfile.step(VACUUM, DENSE_EPS)
        )
        assert res2.R == pytest.approx(res1.R, rel=1e-12)
        assert res2.T == pytest.approx(res1.T, rel=1e-12)
        assert_allclose(res2.B_reflected, scale * res1.B_reflected, rtol=1e-12)
        assert_allclose(res2.B_transmitted, scale * res1.B_transmitted, rtol=1e-12)

    def test_impedance_matched_has_no_reflection(self):
        matched = MediumState(3.0, 3.0)  # same impedance as vacuum
        result = scatter_interface(incident_wave(), TemporalProfile.step(VACUUM, matched))
        assert result.reflected is None
        assert result.R == 0.0

    def test_degenerate_convention(self):
        conv = FrequencyConvention(reflected="positive")
        matched = MediumState(2.0, 2.0)
        result = scatter_interface(incident_wave(), TemporalProfile.step(VACUUM, matched), conv)
        assert result.degenerate
        assert result.omega2 == result.omega3
        assert result.T == pytest.approx(0.5, rel=1e-15)
        with pytest.raises(NoSolutionError):
            scatter_interface(incident_wave(), TemporalProfile.step(VACUUM, DENSE_EPS), conv)

    def test_preconditions(self):
        with pytest.raises(DomainError):
            scatter_interface(incident_wave(), TemporalProfile.ramp(VACUUM, DENSE_EPS, tau=0.1))
        skew = PlaneWave([1.0, 1.0, 0.0], 1.0, X_HAT, 1.0)
        with pytest.raises(DomainError):
            scatter_interface(skew, TemporalProfile.step(VACUUM, DENSE_EPS))
        wrong_speed = PlaneWave(Y_HAT.astype(complex), 1.0, X_HAT, 0.5)
        with pytest.raises(DomainError):
            scatter_interface(wrong_speed, TemporalProfile.step(VACUUM, DENSE_EPS))


class TestNegativeIndex:
    def test_negative_time_refraction_signs(self):
        double_negative = MediumState(-1.0, -4.0, branch=-1)
        result = scatter_interface(incident_wave(), TemporalProfile.step(VACUUM, double_negative))
        # omega3 shares the sign of omega1, so transmission reverses direction,
        # while omega2 < 0 keeps the reflected wave co-propagating.
        assert result.omega3 > 0.0
        assert_allclose(result.transmitted.k, -X_HAT)
        assert result.omega2 < 0.0
        assert_allclose(result.reflected.k, X_HAT)

    def test_opposite_sign_transmission_restores_direction(self):
        conv = FrequencyConvention(transmitted="backward")
        k_r, k_t = wave_vectors(X_HAT, 1.0, 0.5, -0.5, 1.0, -0.5)
        assert_allclose(k_t, X_HAT)


class TestBoundaryResidual:
    def setup_method(self):
        self.rng = np.random.default_rng(9)
        self.samples = self.rng.uniform(-10, 10, size=(100, 3))

    def test_worked_example_residuals_vanish(self):
        result = scatter_interface(incident_wave(), TemporalProfile.step(VACUUM, DENSE_EPS))
        res_E, res_H = boundary_residual(result, self.samples)
        assert res_E <= 1e-10
        assert res_H <= 1e-10

    def test_identical_media_residual_zero(self):
        result = scatter_interface(incident_wave(), TemporalProfile.step(VACUUM, MediumState(1, 1)))
        res_E, res_H = boundary_residual(result, self.samples)
        assert res_E <= 1e-14
        assert res_H <= 1e-14

    def test_tampered_amplitude_detected(self):
        result = scatter_interface(incident_wave(), TemporalProfile.step(VACUUM, DENSE_EPS))
        tampered = PlaneWave(
            2.0 * result.reflected.amplitude,
            result.reflected.omega,
            result.reflected.k,
            result.reflected.v,
        )
        import dataclasses

        bad = dataclasses.replace(result, reflected=tampered)
        res_E, _ = boundary_residual(bad, self.samples)
        scale = float(np.linalg.norm(result.B_incident)) * result.after.epsilon
        assert res_E > 0.01 * scale
