"""Plane-wave fields, magnetic construction, and transversality checks."""

import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from timescatter import (
    DomainError,
    PlaneWave,
    evaluate_E,
    magnetic_from_electric,
    phase_vector,
    transversality_residual,
)

X_HAT = np.array([1.0, 0.0, 0.0])
Y_HAT = np.array([0.0, 1.0, 0.0])
Z_HAT = np.array([0.0, 0.0, 1.0])


def wave(amplitude, omega=1.0, k=Z_HAT, v=1.0):
    return PlaneWave(np.asarray(amplitude, dtype=complex), omega, k, v)


class TestEvaluate:
    def test_unit_phase_at_origin(self):
        w = wave(X_HAT)
        assert_allclose(evaluate_E(w, np.zeros(3), 0.0), X_HAT.astype(complex))

    def test_half_period_flips_sign(self):
        w = wave(X_HAT)
        assert_allclose(
            evaluate_E(w, np.zeros(3), math.pi), -X_HAT.astype(complex), atol=1e-15
        )

    def test_quarter_wavelength_gives_i(self):
        w = wave(X_HAT)
        value = evaluate_E(w, np.array([0.0, 0.0, math.pi / 2]), 0.0)
        assert_allclose(value, 1j * X_HAT, atol=1e-15)

    def test_periodic_in_time(self):
        w = wave([0.3 + 0.1j, 1.0, 0.0], omega=2.5)
        x = np.array([0.2, -0.7, 1.3])
        period = 2 * math.pi / 2.5
        assert_allclose(
            evaluate_E(w, x, 0.4), evaluate_E(w, x, 0.4 + period), rtol=1e-12
        )

    def test_batched_positions(self):
        w = wave(Y_HAT)
        xs = np.array([[0.0, 0.0, 0.0], [0.0, 0.0, math.pi / 2]])
        values = evaluate_E(w, xs, 0.0)
        assert values.shape == (2, 3)
        assert_allclose(values[0], Y_HAT.astype(complex))
        assert_allclose(values[1], 1j * Y_HAT, atol=1e-15)


class TestMagneticFromElectric:
    def test_right_handed_triplet(self):
        w = wave(Y_HAT, k=X_HAT, v=1.0)
        h = magnetic_from_electric(w, mu=1.0)
        assert_allclose(h.amplitude, Z_HAT.astype(complex), atol=1e-15)

    def test_slow_medium_scales_amplitude(self):
        w = wave(Y_HAT, k=X_HAT, v=0.5)
        h = magnetic_from_electric(w, mu=1.0)
        assert_allclose(h.amplitude, 2.0 * Z_HAT, atol=1e-15)

    def test_zero_amplitude_rejected_at_construction(self):
        with pytest.raises(DomainError):
            wave([0.0, 0.0, 0.0])

    def test_zero_mu_rejected(self):
        w = wave(Y_HAT, k=X_HAT)
        with pytest.raises(DomainError):
            magnetic_from_electric(w, mu=0.0)

    def test_preserves_transversality(self):
        rng = np.random.default_rng(7)
        for _ in range(50):
            k = rng.normal(size=3)
            k /= np.linalg.norm(k)
            raw = rng.normal(size=3) + 1j * rng.normal(size=3)
            amp = raw - np.dot(raw, k) * k
            w = PlaneWave(amp, 1.3, k, 0.7)
            h = magnetic_from_electric(w, mu=2.0)
            assert transversality_residual(h) <= 1e-12 * np.linalg.norm(h.amplitude)


class TestTransversality:
    def test_orthogonal(self):
        assert transversality_residual(wave(Y_HAT, k=X_HAT)) == 0.0

    def test_parallel(self):
        assert transversality_residual(wave(X_HAT, k=X_HAT)) == 1.0

    def test_circular_polarization(self):
        amp = np.array([1.0, 1.0j, 0.0]) / math.sqrt(2)
        assert transversality_residual(wave(amp, k=Z_HAT)) == 0.0


class TestPhaseVector:
    def test_vacuum(self):
        assert_allclose(phase_vector(wave(Y_HAT, 1.0, X_HAT, 1.0)).m, X_HAT)

    def test_transmitted_branch_matches_incident(self):
        assert_allclose(phase_vector(wave(Y_HAT, 0.5, X_HAT, 0.5)).m, X_HAT)

    def test_reflected_branch_matches_incident(self):
        assert_allclose(phase_vector(wave(Y_HAT, -0.5, -X_HAT, 0.5)).m, X_HAT)


class TestInvariants:
    def test_nonunit_k_rejected(self):
        with pytest.raises(DomainError):
            PlaneWave(Y_HAT.astype(complex), 1.0, np.array([1.0, 1.0, 0.0]), 1.0)

    def test_zero_omega_rejected(self):
        with pytest.raises(DomainError):
            wave(Y_HAT, omega=0.0)

    def test_zero_speed_rejected(self):
        with pytest.raises(DomainError):
            wave(Y_HAT, v=0.0)

    def test_amplitude_is_read_only(self):
        w = wave(Y_HAT)
        with pytest.raises(ValueError):
            w.amplitude[0] = 1.0
