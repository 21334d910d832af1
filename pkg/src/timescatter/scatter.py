"""Analytic solver for a single temporal interface.

When epsilon and mu jump at time t0 while a plane wave is present, the
field for t > t0 splits into a transmitted wave (frequency omega3) and a
reflected wave (frequency omega2), both on the late side of the
interface.  The wavelength is preserved: all three waves share one
spatial phase vector, which fixes |omega2| = |omega3| =
|v_plus/v_minus| * omega1 and the wave-vector sign relations.  The jump
conditions (continuity of eps*E and mu*H) then determine the amplitudes.

Amplitude bookkeeping uses B = A * exp(-i*omega*t0), the instantaneous
complex amplitude at the interface; reflection and transmission
coefficients are the moduli ratios |B_r|/|B_i| and |B_t|/|B_i|.  Their
sum is not 1: switching the medium exchanges energy with the wave.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import (
    ConsistencyError,
    DegenerateCaseError,
    DomainError,
    NoSolutionError,
)
from .media import MediumState, TemporalProfile, wave_speed
from .waves import PlaneWave, evaluate_E, magnetic_from_electric

__all__ = [
    "FrequencyConvention",
    "DEFAULT_CONVENTION",
    "ScatteringResult",
    "frequencies",
    "wave_vectors",
    "amplitudes",
    "degenerate_amplitude",
    "coefficients",
    "swapped_coefficients",
    "scatter_interface",
    "boundary_residual",
]

_SCALE_TOL = 1e-9  # |scale| = 1 consistency tolerance in wave_vectors
_DEGENERATE_RTOL = 1e-12
_TRANSVERSALITY_RTOL = 1e-9


@dataclass(frozen=True)
class FrequencyConvention:
    """Sign choice for the scattered frequencies.

    ``transmitted``: "forward" selects omega3 > 0, "backward" omega3 < 0.
    ``reflected``: "negative" selects omega2 = -omega3 (the default, under
    which the coefficient formulas are stated), "positive" omega2 = +omega3
    (degenerate: the two scattered waves merge).
    """

    transmitted: str = "forward"
    reflected: str = "negative"

    def __post_init__(self):
        if self.transmitted not in ("forward", "backward"):
            raise DomainError(f"transmitted must be 'forward' or 'backward', got {self.transmitted!r}")
        if self.reflected not in ("negative", "positive"):
            raise DomainError(f"reflected must be 'negative' or 'positive', got {self.reflected!r}")

    @property
    def is_degenerate(self) -> bool:
        return self.reflected == "positive"


DEFAULT_CONVENTION = FrequencyConvention()


def frequencies(
    omega1: float,
    v_minus: float,
    v_plus: float,
    conv: FrequencyConvention = DEFAULT_CONVENTION,
) -> tuple[float, float]:
    """Scattered frequencies (omega2, omega3) from the speed ratio.

    |omega3| = |omega2| = |v_plus / v_minus| * omega1; the signs follow the
    convention.  The default yields omega3 > 0, omega2 = -omega3.
    """
    if not (omega1 > 0.0 and math.isfinite(omega1)):
        raise DomainError(f"omega1 must be positive, got {omega1}")
    if v_minus == 0.0 or v_plus == 0.0:
        raise DomainError("phase speeds must be nonzero")
    mag = abs(v_plus / v_minus) * omega1
    omega3 = mag if conv.transmitted == "forward" else -mag
    omega2 = -omega3 if conv.reflected == "negative" else omega3
    return omega2, omega3


def wave_vectors(
    k_i: np.ndarray,
    omega1: float,
    omega2: float,
    omega3: float,
    v_minus: float,
    v_plus: float,
) -> tuple[np.ndarray, np.ndarray]:
    """Scattered wave vectors (k_r, k_t), each equal to +/- k_i.

    k_t = (omega1/omega3)(v_plus/v_minus) k_i and analogously for k_r; the
    scale factors must have modulus 1 (the frequencies already absorb the
    speed ratio), leaving only a sign.
    """
    k_i = np.asarray(k_i, dtype=np.float64)
    scale_t = (omega1 / omega3) * (v_plus / v_minus)
    scale_r = (omega1 / omega2) * (v_plus / v_minus)
    for name, scale in (("transmitted", scale_t), ("reflected", scale_r)):
        if abs(abs(scale) - 1.0) > _SCALE_TOL:
            raise ConsistencyError(
                f"{name} wave-vector scale has modulus {abs(scale)!r}, expected 1 "
                f"within {_SCALE_TOL}; frequencies inconsistent with speeds"
            )
    k_t = math.copysign(1.0, scale_t) * k_i
    k_r = math.copysign(1.0, scale_r) * k_i
    return k_r, k_t


def amplitudes(
    B_i: np.ndarray,
    omega1: float,
    omega2: float,
    omega3: float,
    eps_minus: float,
    eps_plus: float,
) -> tuple[np.ndarray, np.ndarray]:
    """Scattered amplitudes (B_r, B_t) for distinct omega2 != omega3.

    Both are scalar multiples of B_i:

        B_r = (1 - (w1/w3)(e-/e+)) / ((w1/w2) - (w1/w3)) * B_i
        B_t = ((w1/w2)(e-/e+) - 1) / ((w1/w2) - (w1/w3)) * B_i

    and they satisfy B_r + B_t = (e-/e+) B_i exactly up to rounding.
    """
    r, t = amplitude_factors(omega1, omega2, omega3, eps_minus, eps_plus)
    B_i = np.asarray(B_i, dtype=np.complex128)
    if np.linalg.norm(B_i) == 0.0:
        raise DomainError("B_i must be nonzero")
    return r * B_i, t * B_i


def amplitude_factors(
    omega1: float,
    omega2: float,
    omega3: float,
    eps_minus: float,
    eps_plus: float,
) -> tuple[float, float]:
    """Scalar multipliers (B_r/B_i, B_t/B_i) of the amplitude formulas."""
    if eps_plus == 0.0:
        raise DomainError("eps_plus must be nonzero")
    if abs(omega2 - omega3) <= _DEGENERATE_RTOL * 0.5 * (abs(omega2) + abs(omega3)):
        raise DegenerateCaseError(
            f"omega2 = omega3 = {omega2}: amplitude split is not unique; "
            "use degenerate_amplitude"
        )
    eps_ratio = eps_minus / eps_plus
    q2 = omega1 / omega2
    q3 = omega1 / omega3
    denom = q2 - q3
    r_factor = (1.0 - q3 * eps_ratio) / denom
    t_factor = (q2 * eps_ratio - 1.0) / denom
    return r_factor, t_factor


def degenerate_amplitude(
    B_i: np.ndarray,
    omega1: float,
    omega2: float,
    eps_minus: float,
    eps_plus: float,
) -> np.ndarray:
    """Combined scattered amplitude when omega2 = omega3.

    The matching system is solvable only under the compatibility condition
    eps_minus * omega1 = eps_plus * omega2; the two scattered waves then
    merge into one with combined amplitude (eps_minus/eps_plus) * B_i, and
    the split into transmitted and reflected parts is not unique.
    """
    lhs = eps_minus * omega1
    rhs = eps_plus * omega2
    scale = max(abs(lhs), abs(rhs))
    if abs(lhs - rhs) > 1e-12 * scale:
        raise NoSolutionError(
            f"compatibility eps_minus*omega1 = eps_plus*omega2 violated "
            f"({lhs} != {rhs}); the matching system has no solution"
        )
    B_i = np.asarray(B_i, dtype=np.complex128)
    return (eps_minus / eps_plus) * B_i


def coefficients(before: MediumState, after: MediumState) -> tuple[float, float, float]:
    """Closed-form (R, T, R+T) under the default convention (omega2 = -omega3 < 0).

        R = 1/2 |e-/e+ - sqrt(e- mu-) / sqrt(e+ mu+)|
        T = 1/2 (e-/e+ + sqrt(e- mu-) / sqrt(e+ mu+))

    The sum obeys the impedance-ordered identity: e-/e+ when Z1 < Z2,
    sqrt(e- mu- / (e+ mu+)) when Z1 > Z2 (both when Z1 = Z2, where R = 0).
    """
    eps_ratio = before.epsilon / after.epsilon
    index_ratio = math.sqrt(before.epsilon * before.mu) / math.sqrt(after.epsilon * after.mu)
    R = 0.5 * abs(eps_ratio - index_ratio)
    T = 0.5 * (eps_ratio + index_ratio)
    return R, T, R + T


def swapped_coefficients(before: MediumState, after: MediumState) -> tuple[float, float]:
    """(R, T) for the backward-transmitted branch (omega3 < 0, omega2 = -omega3).

    The two coefficient formulas exchange roles relative to the default
    branch.
    """
    eps_ratio = before.epsilon / after.epsilon
    index_ratio = math.sqrt(before.epsilon * before.mu) / math.sqrt(after.epsilon * after.mu)
    R = 0.5 * (eps_ratio + index_ratio)
    T = 0.5 * abs(eps_ratio - index_ratio)
    return R, T


@dataclass(frozen=True, eq=False)
class ScatteringResult:
    """Full solution of one temporal interface.

    ``reflected`` or ``transmitted`` is None when that branch has exactly
    zero amplitude (impedance-matched media give no reflected wave).  For a
    degenerate convention (omega2 = omega3) the non-unique combined wave is
    stored under ``transmitted`` and ``degenerate`` is set.

    R and T are |B_r|/|B_i| and |B_t|/|B_i| with B = A*exp(-i*omega*t0)
    taken from the stored waves.
    """

    incident: PlaneWave
    reflected: Optional[PlaneWave]
    transmitted: Optional[PlaneWave]
    R: float
    T: float
    energy_sum: float
    omega2: float
    omega3: float
    degenerate: bool
    before: MediumState
    after: MediumState
    t0: float

    def _b_amplitude(self, wave: Optional[PlaneWave]) -> np.ndarray:
        if wave is None:
            return np.zeros(3, dtype=np.complex128)
        return wave.amplitude * cmath.exp(-1j * wave.omega * self.t0)

    @property
    def B_incident(self) -> np.ndarray:
        return self._b_amplitude(self.incident)

    @property
    def B_reflected(self) -> np.ndarray:
        return self._b_amplitude(self.reflected)

    @property
    def B_transmitted(self) -> np.ndarray:
        return self._b_amplitude(self.transmitted)


def scatter_interface(
    incident: PlaneWave,
    profile: TemporalProfile,
    conv: FrequencyConvention = DEFAULT_CONVENTION,
) -> ScatteringResult:
    """Solve a step profile end to end: frequencies, wave vectors, amplitudes.

    The incident wave must be transversal (|A.k| < 1e-9 |A|), have positive
    frequency, and propagate at the before-medium speed.  The returned
    waves carry A amplitudes recovered from the B algebra by the inverse
    phase factor exp(+i*omega*t0).
    """
    if profile.kind != "step":
        raise DomainError(f"scatter_interface needs a step profile, got {profile.kind!r}")
    before, after, t0 = profile.before, profile.after, profile.t0
    v_minus = wave_speed(before)
    v_plus = wave_speed(after)
    if abs(incident.v - v_minus) > 1e-9 * abs(v_minus):
        raise DomainError(
            f"incident wave speed {incident.v} does not match the before medium "
            f"({v_minus})"
        )
    amp_norm = float(np.linalg.norm(incident.amplitude))
    if abs(np.dot(incident.amplitude, incident.k)) > _TRANSVERSALITY_RTOL * amp_norm:
        raise DomainError("incident wave is not transversal (A.k != 0)")

    omega1 = incident.omega
    omega2, omega3 = frequencies(omega1, v_minus, v_plus, conv)
    k_r, k_t = wave_vectors(incident.k, omega1, omega2, omega3, v_minus, v_plus)
    B_i = incident.amplitude * cmath.exp(-1j * omega1 * t0)

    if conv.is_degenerate:
        combined = degenerate_amplitude(B_i, omega1, omega2, before.epsilon, after.epsilon)
        A_t = combined * cmath.exp(1j * omega3 * t0)
        transmitted = PlaneWave(A_t, omega3, k_t, v_plus)
        T = float(np.linalg.norm(combined) / np.linalg.norm(B_i))
        return ScatteringResult(
            incident=incident,
            reflected=None,
            transmitted=transmitted,
            R=0.0,
            T=T,
            energy_sum=T,
            omega2=omega2,
            omega3=omega3,
            degenerate=True,
            before=before,
            after=after,
            t0=t0,
        )

    B_r, B_t = amplitudes(B_i, omega1, omega2, omega3, before.epsilon, after.epsilon)
    norm_i = float(np.linalg.norm(B_i))
    R = float(np.linalg.norm(B_r) / norm_i)
    T = float(np.linalg.norm(B_t) / norm_i)
    reflected = None
    if R > 0.0:
        reflected = PlaneWave(B_r * cmath.exp(1j * omega2 * t0), omega2, k_r, v_plus)
    transmitted = None
    if T > 0.0:
        transmitted = PlaneWave(B_t * cmath.exp(1j * omega3 * t0), omega3, k_t, v_plus)
    return ScatteringResult(
        incident=incident,
        reflected=reflected,
        transmitted=transmitted,
        R=R,
        T=T,
        energy_sum=R + T,
        omega2=omega2,
        omega3=omega3,
        degenerate=False,
        before=before,
        after=after,
        t0=t0,
    )


def boundary_residual(result: ScatteringResult, x_samples) -> tuple[float, float]:
    """Jump-condition residuals of a scattering solution at t = t0.

    res_E = max over samples of |eps+ (E_t + E_r) - eps- E_i| and res_H the
    analogue with mu*H built from the electric fields.  Both vanish (below
    1e-10 for unit-scale amplitudes) for solver-produced results; a
    tampered amplitude shows up as a residual of comparable scale.
    """
    x = np.atleast_2d(np.asarray(x_samples, dtype=np.float64))
    t0 = result.t0

    def field_sum(waves, weights, magnetics):
        total = np.zeros((x.shape[0], 3), dtype=np.complex128)
        for wave, weight, mag in zip(waves, weights, magnetics):
            if wave is None:
                continue
            w = magnetic_from_electric(wave, mag) if mag is not None else wave
            total += weight * evaluate_E(w, x, t0)
        return total

    eps_m, eps_p = result.before.epsilon, result.after.epsilon
    mu_m, mu_p = result.before.mu, result.after.mu

    jump_E = field_sum(
        (result.transmitted, result.reflected, result.incident),
        (eps_p, eps_p, -eps_m),
        (None, None, None),
    )
    jump_H = field_sum(
        (result.transmitted, result.reflected, result.incident),
        (mu_p, mu_p, -mu_m),
        (mu_p, mu_p, mu_m),
    )
    res_E = float(np.max(np.linalg.norm(jump_E, axis=1)))
    res_H = float(np.max(np.linalg.norm(jump_H, axis=1)))
    return res_E, res_H
