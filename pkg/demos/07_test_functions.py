"""Boundary test-function families and their pinned identities.

The families used to force lower bounds carry value/derivative identities
at the parameter point. Most hold exactly as printed in the source
material; one does not, and the verifier reports the observed value
instead of silently repairing the formula.
"""

import math

from diskvolterra import TestFamily, default_grid, family_zygmund_norm, verify_family_claims

grid = default_grid()

a = 0.8
s = 1 - a * a

h_n = TestFamily("h_n", a)
print("h_n'(a)  =", h_n.eval(a, 1), "            (claimed 0: exact)")
print("h_n''(a) =", h_n.eval(a, 2), " (claimed -conj(a)/(1-|a|^2) =",
      -a / s, ")")

g_n = TestFamily("g_n", a)
print("\ng_n(a)  =", g_n(a), "                    (claimed 0: exact)")
print("g_n'(a) =", g_n.eval(a, 1), " (claimed log(1/(1-|a|^2)) =",
      math.log(1 / s), ")")

# The g_a family is different: differentiating the printed formulas gives
# (1-|a|^2)^(1-alpha) (1 - 1/conj(a)) at z = a, which is not zero.
alpha = 1.5
g_a = TestFamily("g_a", a, alpha)
print("\ng_a'(a) =", g_a.eval(a, 1), "  (claimed 0; observed matches "
      "(1-|a|^2)^(1-alpha)(1-1/a) =", s ** (1 - alpha) * (1 - 1 / a), ")")

# Uniform norm bounds over the parameter: the families stay bounded as the
# parameter approaches the boundary.
print("\nZygmund-type norms of k_a over a ladder of parameters:")
for aa in (0.6, 0.8, 0.9, 0.95, 0.99):
    print(f"  a = {aa}: {family_zygmund_norm(TestFamily('k_a', aa), 1.0, grid):.4f}")

# The full claim report, machine-readable; mismatches are flagged, never fixed.
report = verify_family_claims(a_grid=[0.6, 0.9], alpha_grid=[1.5], grid=grid)
flat = [c for fam in report.values() for c in fam["claims"]]
print(f"\nclaim report: {len(flat)} claims, "
      f"{sum(c['status'] == 'verified' for c in flat)} verified, "
      f"{sum(c['status'] == 'mismatch' for c in flat)} mismatching (reported)")
