#!/usr/bin/env python3
"""Walkthrough: why the three waves must share one spatial phase vector.

Matching the fields at the switch instant produces an identity of the
form  B_t e^(i m_t x) + B_r e^(i m_r x) - B_i e^(i m_i x) = 0  for every
point x.  Complex exponentials with distinct frequencies are linearly
independent (their Wronskian is a Vandermonde determinant), so the three
exponents are forced to coincide: the temporal analogue of Snell's law.
This script shows the executable version of that argument.
"""

import numpy as np

from timescatter import (
    ExponentialSum,
    assert_forced_equality,
    canonical_grid,
    sum_residual,
    vandermonde_product,
)

# The Vandermonde product vanishes exactly when two frequencies repeat.
print("vandermonde_product:")
for omegas in ([1.0], [1.0, 2.0], [1.0, 1.0, 3.0], [0.5, 1.5, 2.5]):
    print(f"  {omegas!r:>18} -> {vandermonde_product(omegas)}")

# Distinct frequencies cannot cancel: sample one beat period.
distinct = ExponentialSum.from_terms(
    [(np.array([1.0 + 0j]), 1.0), (np.array([-1.0 + 0j]), 2.0)]
)
grid = canonical_grid(distinct.omegas)
print(f"\ndistinct frequencies 1 and 2: residual over {grid.size} grid points = "
      f"{sum_residual(distinct, grid):.3f}  (cannot vanish)")
print(f"forced-equality verdict: {assert_forced_equality(distinct, 1e-9)}")

# Equal frequencies can cancel: amplitudes simply sum to zero.
equal = ExponentialSum.from_terms(
    [(np.array([1.0 + 0j]), 5.0), (np.array([-1.0 + 0j]), 5.0)]
)
print(f"\nequal frequencies: residual = {sum_residual(equal, canonical_grid(equal.omegas)):.3e}")
print(f"forced-equality verdict: {assert_forced_equality(equal, 1e-9)}")

# Random non-cancelling sums stay far from zero on the canonical grid.
rng = np.random.default_rng(1)
worst = np.inf
for _ in range(500):
    n = rng.integers(2, 6)
    while True:
        omegas = np.sort(rng.uniform(-5, 5, n))
        if np.min(np.diff(omegas)) >= 0.1:
            break
    amps = rng.normal(size=(n, 2)) + 1j * rng.normal(size=(n, 2))
    s = ExponentialSum(amps, omegas)
    ratio = sum_residual(s, canonical_grid(omegas)) / np.max(np.linalg.norm(amps, axis=1))
    worst = min(worst, ratio)
print(f"\nsmallest residual / max|A| over 500 random sums with gaps >= 0.1: {worst:.3f}")
print("(the regression suite asserts this never drops below 0.01)")
