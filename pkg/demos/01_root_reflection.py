"""
Reflecting roots across the unit circle
=======================================

A polynomial with roots inside the disk sheds weighted energy when a
root factor (z - a) is traded for (1 - conj(a) z).  This walk-through
reflects the roots of (z - 1/2)(z - 1/3) one at a time and watches the
norms move.
"""

import numpy as np

from blaschke import (
    WeightSequence,
    as_series,
    decompose,
    find_roots_in_disk,
    h2_norm_sq,
    reflect_root,
    x_norm_sq,
)

# the running example: both roots real and well inside the disk
f = as_series([1 / 6, -5 / 6, 1.0])
print("f coefficients:", np.round(f.coeffs.real, 6))

roots = find_roots_in_disk(f)
print("interior roots:", [complex(np.round(a, 6)) for a in roots.roots])

# reflecting a root keeps the boundary modulus, so the H^2 norm is flat
w = WeightSequence.dirichlet()
g1 = reflect_root(f, 0.5)
print("\nafter reflecting 1/2:")
print("  coefficients:", np.round(g1.coeffs.real, 6))
print("  h2 before/after:", h2_norm_sq(f), h2_norm_sq(g1))

# the weighted norm drops by a computable correction per reflection
print("\nDirichlet-weight energy ledger:")
chain = decompose(f)
corrections = chain.correction_terms(w)
x_running = x_norm_sq(f, w)
print(f"  x(f)      = {x_running:.6f}")
for stage, alpha, corr in zip(chain.stages[1:], chain.roots.roots, corrections):
    x_running -= corr
    print(
        f"  reflect {complex(np.round(alpha, 4))}: drop {corr:.6f}, "
        f"x now {x_norm_sq(stage, w):.6f} (ledger {x_running:.6f})"
    )

g = chain.g
print("\nzero-free factor g:", np.round(g.coeffs.real, 6))
print("x(f) - sum(drops) =", x_norm_sq(f, w) - sum(corrections))
print("x(g)              =", x_norm_sq(g, w))

# g has no roots left inside the disk
print("roots of g inside the disk:", len(find_roots_in_disk(g)))
