#!/usr/bin/env python3
"""Walkthrough: scattering of a plane wave at one temporal interface.

A y-polarized wave travels through vacuum until, at t = 0, the whole
medium suddenly becomes four times denser (epsilon 1 -> 4).  The wave
splits into a transmitted and a reflected part, both existing *after*
the switch; the wavelength stays fixed while the frequency halves.
"""

import numpy as np

from timescatter import (
    MediumState,
    PlaneWave,
    TemporalProfile,
    boundary_residual,
    coefficients,
    scatter_interface,
    swapped_coefficients,
)

vacuum = MediumState(epsilon=1.0, mu=1.0)
dense = MediumState(epsilon=4.0, mu=1.0)

print("media:")
print(f"  before: eps={vacuum.epsilon}, mu={vacuum.mu}, v={vacuum.wave_speed}, Z={vacuum.impedance}")
print(f"  after:  eps={dense.epsilon}, mu={dense.mu}, v={dense.wave_speed}, Z={dense.impedance}")

incident = PlaneWave(
    amplitude=np.array([0.0, 1.0, 0.0], dtype=complex),
    omega=1.0,
    k=np.array([1.0, 0.0, 0.0]),
    v=vacuum.wave_speed,
)
profile = TemporalProfile.step(vacuum, dense, t0=0.0)
result = scatter_interface(incident, profile)

print("\nfrequencies and directions:")
print(f"  omega1 = {incident.omega}  ->  omega3 = {result.omega3} (transmitted), "
      f"omega2 = {result.omega2} (reflected)")
print(f"  k_t = {result.transmitted.k}   k_r = {result.reflected.k}")

print("\namplitudes at the interface (units of the incident amplitude):")
print(f"  B_t = {result.B_transmitted[1]:+.6f}   B_r = {result.B_reflected[1]:+.6f}")
print(f"  R = {result.R}   T = {result.T}   R+T = {result.energy_sum}")
print("  note: R+T != 1 -- switching the medium exchanges energy with the wave.")

# The jump conditions (eps*E and mu*H continuous at t0) hold to rounding.
rng = np.random.default_rng(0)
res_E, res_H = boundary_residual(result, rng.uniform(-10, 10, size=(200, 3)))
print(f"\njump-condition residuals over 200 random points: {res_E:.2e}, {res_H:.2e}")

# How the coefficients move with the density contrast.
print("\ncontrast sweep (before = vacuum):")
print(f"  {'eps_after':>10} {'R':>10} {'T':>10} {'R+T':>10}")
for eps in [0.25, 0.5, 1.0, 2.0, 4.0, 9.0]:
    after = MediumState(eps, 1.0)
    R, T, total = coefficients(vacuum, after)
    print(f"  {eps:>10.2f} {R:>10.4f} {T:>10.4f} {total:>10.4f}")

# The backward-transmitted branch swaps the two coefficient formulas.
R_swap, T_swap = swapped_coefficients(vacuum, dense)
print(f"\nbackward-transmitted branch: R = {R_swap}, T = {T_swap} (roles exchanged)")

# A double-negative medium reverses the transmitted wave outright.
double_negative = MediumState(-1.0, -4.0, branch=-1)
neg = scatter_interface(incident, TemporalProfile.step(vacuum, double_negative))
print(f"\nnegative-index switch (eps, mu = -1, -4): k_t = {neg.transmitted.k}, "
      f"k_r = {neg.reflected.k}")
