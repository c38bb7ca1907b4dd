"""Monomial norm asymptotics: the scaling laws behind every estimator.

For the standard weight, (n+1)^alpha ||z^n|| converges to (2 alpha/e)^alpha;
for the logarithmic weight, log(n) ||z^n|| creeps toward 1 like 1/log n.
These limits calibrate the scaled sequence quantities used by the
boundedness criteria and essential-norm estimates.
"""

import math

from diskvolterra import Weight, monomial_norm
from diskvolterra.cli import lemma25_log_fit

print("standard weight: (n+1)^a ||z^n||_{v_a}  ->  (2a/e)^a")
for alpha in (0.5, 1.0, 2.0):
    target = (2 * alpha / math.e) ** alpha
    print(f"\n  alpha = {alpha}   target {target:.6f}")
    for n in (10, 100, 1000, 10_000, 100_000):
        scaled = (n + 1) ** alpha * monomial_norm(n, Weight.standard(alpha))
        print(f"    n = {n:>6}: {scaled:.6f}   rel err {scaled/target-1:+.2e}")

print("\nlogarithmic weight: log(n) ||z^n||_{v_log}  ->  1   (very slowly)")
vlog = Weight.logarithmic()
ns = [1000, 10_000, 100_000, 1_000_000, 10_000_000]
vals = []
for n in ns:
    scaled = math.log(n) * monomial_norm(n, vlog)
    vals.append(scaled)
    print(f"    n = {n:>8}: {scaled:.6f}")

fit = lemma25_log_fit(ns, vals)
print(f"\n  a + b/log(n) extrapolation over n >= {min(fit['fit_checkpoints'])}: "
      f"a = {fit['a']:.4f}  (limit is 1; convergence is O(log log n / log n))")
