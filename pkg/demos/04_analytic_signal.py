"""
From boundary samples to a disk function and back
=================================================

A real signal on the circle extends to an analytic function on the
disk whose boundary real part reproduces the signal.  Cosines become
pure powers, and the imaginary part is the circular Hilbert transform.
"""

import numpy as np

from blaschke import (
    BoundarySignal,
    analytic_signal,
    boundary_samples,
    h2_norm_sq,
    project_coefficients,
)

# a cosine is the simplest band-limited signal: it becomes z itself
cos = BoundarySignal.from_function(np.cos, 32)
f = analytic_signal(cos, cap=8)
print("cos theta -> coefficients:", np.round(f.coeffs.real, 12)[:4], "...")

# a mixed trig polynomial lands on the matching power coefficients
sig = BoundarySignal.from_function(
    lambda t: 0.25 + 0.5 * np.cos(t) + np.cos(2 * t) - 0.75 * np.sin(3 * t), 64
)
f = analytic_signal(sig, cap=6)
print("\ntrig polynomial coefficients (re, im):")
for n, c in enumerate(f.coeffs):
    if abs(c) > 1e-12:
        print(f"  z^{n}: {c.real:+.4f} {c.imag:+.4f}i")

# boundary real part matches the input samples to rounding
values = boundary_samples(f, 64)
err = np.max(np.abs(values.real - sig.samples))
print(f"\nreal-part reconstruction error: {err:.3e}")

# the imaginary part is the Hilbert transform: cos -> sin
theta = np.linspace(0.0, 2 * np.pi, 32, endpoint=False)
g = analytic_signal(BoundarySignal.from_function(np.cos, 32), cap=15)
hilbert = boundary_samples(g, 32).imag
print(f"cos -> sin transform error: {np.max(np.abs(hilbert - np.sin(theta))):.3e}")

# sample -> project round trip is exact for polynomials
coeffs = np.round(np.linspace(-0.5, 0.5, 7), 3)
samples = boundary_samples(coeffs, 32)
back = project_coefficients(samples, cap=6)
print(f"\nsample/project round trip error: {np.max(np.abs(back.coeffs - coeffs)):.3e}")
print(f"energy on the grid {np.mean(np.abs(samples)**2):.6f}"
      f" vs coefficient energy {h2_norm_sq(back):.6f}")
