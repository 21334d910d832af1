"""Executable form of the distinct-frequency independence argument.

A finite sum of complex exponentials with nonzero vector coefficients
can vanish identically only if all frequencies coincide (the Vandermonde
determinant of the frequency derivatives is nonzero otherwise).  This is
the step that forces the incident, reflected and transmitted spatial
phase vectors to match at a temporal interface.

The identical-in-x statement is made executable by sampling: a grid with
at least 2N points spanning one period of the smallest frequency gap
suffices to detect non-cancellation numerically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ResolutionError

__all__ = [
    "ExponentialSum",
    "vandermonde_product",
    "sum_residual",
    "canonical_grid",
    "assert_forced_equality",
]

_EQUAL_RTOL = 1e-12  # frequencies closer than this are "the same"
_RESOLVE_RTOL = 1e-9  # gaps below this cannot be certified by sampling


@dataclass(frozen=True, eq=False)
class ExponentialSum:
    """Sum of terms A_j * exp(i w_j x) with nonzero complex n-vector A_j."""

    amplitudes: np.ndarray  # (N, n) complex
    omegas: np.ndarray  # (N,) real

    def __post_init__(self):
        amps = np.atleast_2d(np.asarray(self.amplitudes, dtype=np.complex128))
        omegas = np.atleast_1d(np.asarray(self.omegas, dtype=np.float64))
        if amps.shape[0] != omegas.shape[0] or omegas.ndim != 1:
            raise DomainError("need one amplitude vector per frequency")
        if amps.shape[0] < 1:
            raise DomainError("need at least one term")
        norms = np.linalg.norm(amps, axis=1)
        if np.any(norms == 0.0):
            raise DomainError("every amplitude must be nonzero")
        if not np.all(np.isfinite(omegas)):
            raise DomainError("frequencies must be finite")
        amps.setflags(write=False)
        omegas.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)
        object.__setattr__(self, "omegas", omegas)

    @classmethod
    def from_terms(cls, terms) -> "ExponentialSum":
        """Build from an iterable of (amplitude_vector, omega) pairs."""
        amps, omegas = zip(*((np.atleast_1d(a), w) for a, w in terms))
        return cls(np.vstack([a[None, :] for a in amps]), np.array(omegas))

    @property
    def n_terms(self) -> int:
        return self.amplitudes.shape[0]

    def evaluate(self, x) -> np.ndarray:
        """Sum value at point(s) x; shape (n,) for a scalar x, (len(x), n) else."""
        x_arr = np.asarray(x, dtype=np.float64)
        phases = np.exp(1j * np.multiply.outer(x_arr, self.omegas))
        values = phases @ self.amplitudes
        return values


def vandermonde_product(omegas) -> complex:
    """prod over k < l of (i w_l - i w_k); zero iff two frequencies repeat."""
    omegas = np.atleast_1d(np.asarray(omegas, dtype=np.float64))
    if omegas.size < 1:
        raise DomainError("need at least one frequency")
    product = 1.0 + 0.0j
    for k in range(omegas.size):
        for ell in range(k + 1, omegas.size):
            product *= 1j * (omegas[ell] - omegas[k])
    return product


def sum_residual(s: ExponentialSum, x_grid) -> float:
    """max over the grid of the Euclidean norm of the sum; 0 means cancellation."""
    x = np.atleast_1d(np.asarray(x_grid, dtype=np.float64))
    if np.unique(x).size < 2 * s.n_terms:
        raise DomainError(
            f"grid needs at least {2 * s.n_terms} distinct points, got {np.unique(x).size}"
        )
    values = s.evaluate(x)
    return float(np.max(np.linalg.norm(values, axis=-1)))


def _min_gap(omegas: np.ndarray) -> float:
    """Smallest nonzero pairwise frequency difference (inf if all equal)."""
    unique = np.unique(omegas)
    if unique.size < 2:
        return math.inf
    return float(np.min(np.diff(unique)))


def canonical_grid(omegas) -> np.ndarray:
    """Uniform 4N-point grid spanning one period of the smallest gap.

    With all frequencies equal (or a single term) the span falls back to
    one period of the common frequency (or 2*pi for zero frequency).
    """
    omegas = np.atleast_1d(np.asarray(omegas, dtype=np.float64))
    n = omegas.size
    gap = _min_gap(omegas)
    if math.isinf(gap):
        base = abs(omegas[0]) if omegas[0] != 0.0 else 1.0
        span = 2.0 * math.pi / base
    else:
        span = 2.0 * math.pi / gap
    return np.linspace(0.0, span, max(4 * n, 2 * n + 1))


def assert_forced_equality(s: ExponentialSum, tol: float) -> bool:
    """Whether a numerically cancelling sum indeed has all-equal frequencies.

    The caller asserts that the sum cancels (residual over the canonical
    grid at most tol * sum of amplitude norms).  Returns True iff the
    frequencies are pairwise equal within resolvable precision -- the only
    way a sum with nonzero amplitudes can cancel.  Raises
    :class:`ResolutionError` when the claim cannot be certified: either
    the smallest gap is below sampling resolution, or a near-zero residual
    is reported for genuinely distinct frequencies (numerical misuse).
    """
    if tol <= 0.0:
        raise DomainError(f"tol must be positive, got {tol}")
    omegas = s.omegas
    scale = max(1.0, float(np.max(np.abs(omegas))))
    spread = float(np.max(omegas) - np.min(omegas))
    if spread <= _EQUAL_RTOL * scale:
        return True
    gap = _min_gap(omegas)
    if gap < _RESOLVE_RTOL * scale:
        raise ResolutionError(
            f"smallest frequency gap {gap:.3e} is below sampling resolution "
            f"({_RESOLVE_RTOL * scale:.3e}); cannot certify equality"
        )
    residual = sum_residual(s, canonical_grid(omegas))
    amp_scale = float(np.sum(np.linalg.norm(s.amplitudes, axis=1)))
    if residual <= tol * amp_scale:
        raise ResolutionError(
            f"residual {residual:.3e} reported as cancelling for distinct "
            "frequencies with nonzero amplitudes; impossible for an exact sum, "
            "so the sampled claim is numerically unsound"
        )
    return False
