"""Essential-norm estimates: compact cases decay, non-compact cases don't.

The essential norm of a bounded product operator is comparable to a max
of scaled tail limsups. Two independent routes are computed per
condition: the window-max of the scaled sequence scan, and the boundary
route filtering the pointwise expression to {|phi(z)| > 1 - eps}.
"""

import math

from diskvolterra import (KINDS, default_grid, essential_norm,
                          symbol_from_config)

grid = default_grid()

# Compact case: phi = z/2 keeps every image away from the boundary, so all
# condition estimates vanish and the compact flag is set.
half = symbol_from_config({"phi": {"family": "scaled_identity", "params": {"c": 0.5}},
                           "g": {"family": "identity"}}, grid=grid)
print("phi = z/2, g = z (compact for every kind):")
for kind in KINDS:
    est = essential_norm(kind, half, 1.5, 1.5, grid)
    print(f"  {kind}: combined {est.combined:.3e}  compact: {est.compact_flag}")

# For the U-type products with source exponent below 1, the value is
# exactly zero; diagnostics ride along and confirm the decay.
zero_case = essential_norm("ugcphi", half, 0.5, 1.0, grid)
print(f"\nugcphi at alpha=0.5: theorem value {zero_case.combined} "
      f"(exact zero case: {zero_case.theorem_zero})")
for c in zero_case.conditions:
    print(f"  diagnostic {c.u_label}: sequence {c.sequence_estimate:.2e}")

# Non-compact witness: phi = z, g = z at alpha = beta = 1. The scaled
# sequence tail converges to 2/e, matching the monomial-norm limit.
ident = symbol_from_config({"phi": {"family": "scaled_identity", "params": {"c": 1.0}},
                            "g": {"family": "identity"}}, grid=grid)
est = essential_norm("vgcphi", ident, 1.0, 1.0, grid)
print(f"\nvgcphi with phi = z, g = z, alpha = beta = 1:")
print(f"  combined estimate {est.combined:.6f}   (2/e = {2/math.e:.6f})")
print(f"  compact flag: {est.compact_flag}")
for c in est.conditions:
    print(f"  condition {c.u_label}: sequence {c.sequence_estimate:.4g}  "
          f"boundary {c.boundary.estimate:.4g} ({c.boundary.trend})")
