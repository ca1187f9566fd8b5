"""
Infinitely many roots, finitely many at a time
==============================================

When roots pile up against the unit circle the reflection ledger
still closes, provided the weight stays bounded with a summable tail
and the root radii approach 1 fast enough.  Infinite products are out
of reach numerically, so the experiment truncates: take the first K
roots, build the function by boundary sampling, and check the bound
for a ladder of K values.
"""

import numpy as np

from blaschke import (
    WeightSequence,
    as_series,
    boundary_accumulating_roots,
    classify,
    verify_theorem3_truncated,
)

# radii 1 - 1/(j+1)^2 approach the boundary fast enough to keep the
# product convergent; the angles walk around the circle
roots = boundary_accumulating_roots(30)
print("root radii (first 8):", np.round([abs(a) for a in roots.roots[:8]], 4))
print("distance to boundary decays like 1/j^2:",
      np.round([1 - abs(a) for a in roots.roots[:8]], 5))

w = WeightSequence.concave_power_sum(3.0)
growth = classify(w)
print(f"\nweight: concave power sum, limit {growth.limit:.4f},"
      f" tail summable: {growth.tail_summable}")

reports = verify_theorem3_truncated(roots, as_series([1.0]), w, caps=[5, 10, 20, 30])

print("\n  K   x(F_K)      sum of drops   bound rhs    slack")
for r in reports:
    ctx = r.context
    partial = ctx["correction_partial_sums"]
    print(
        f"  {ctx['cap']:2d}  {ctx['x_truncated']:.6f}"
        f"    {partial[-1]:.6f}       {r.rhs:.6f}    {r.slack:.4f}"
    )

print("\nwithin each truncation the correction partial sums are")
print("nondecreasing and stay below the truncated energy:")
r = reports[-1]
partial = r.context["correction_partial_sums"]
print("  first 6 partial sums:", np.round(partial[:6], 5))
print("  final:", round(partial[-1], 5),
      " energy:", round(r.context["x_truncated"], 5))

print("\nprojection quality per truncation:")
for r in reports:
    print(f"  K={r.context['cap']:2d}: projection cap {r.context['projection_cap']},"
          f" round-trip error {r.context['roundtrip_error']:.2e}")
