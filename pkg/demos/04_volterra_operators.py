"""The two Volterra-type operators, their composition products, and the
two routes to their derivatives.

U_g integrates f g', V_g integrates f' g; composing with C_phi on either
side yields four products. Norm work never composes series: the second
derivative of each image has a closed pointwise form in the symbols.
"""

import numpy as np

from diskvolterra import (KINDS, SelfMapSymbol, TruncatedSeries, apply_product,
                          apply_ug, apply_vg, default_grid,
                          operator_norm_estimate, product_second_derivative)

grid = default_grid()
phi = TruncatedSeries([0, 0.5, 0.25])     # a self-map: |phi| <= 3/4
g = TruncatedSeries([0, 1, 0.5])
sym = SelfMapSymbol(phi, g, grid=grid)
print("certified sup|phi| on the outermost circle:", sym.phi_sup_modulus)

f = TruncatedSeries([1, -0.5, 0.25, 0.125j])

# Integration by parts ties the two Volterra operators together exactly:
# U_g f + V_g f = f g - f(0) g(0) on coefficients.
lhs = apply_ug(sym, f) + apply_vg(sym, f)
rhs = f.mul(g) - f.coefficient(0) * g.coefficient(0)
pad = max(len(lhs.coeffs), len(rhs.coeffs))
a = np.zeros(pad, complex); a[:len(lhs.coeffs)] = lhs.coeffs
b = np.zeros(pad, complex); b[:len(rhs.coeffs)] = rhs.coeffs
print("integration-by-parts coefficient error:", np.max(np.abs(a - b)))

# The four products, as series transforms.
print("\nimages of f under the four products (first 5 coefficients):")
for kind in KINDS:
    image = apply_product(kind, sym, f)
    print(f"  {kind}: {np.round(image.coeffs[:5], 6)}")

# Pointwise second derivatives agree with finite differences of the
# series route, without composition-truncation error.
z, h = 0.3 + 0.1j, 1e-4
for kind in KINDS:
    F = apply_product(kind, sym, f)
    fd = (F(z + h) - 2 * F(z) + F(z - h)) / h ** 2
    closed = product_second_derivative(kind, sym, f, z)
    print(f"  {kind}: |closed - FD| = {abs(closed - fd):.2e}")

# A sampled lower bound on the operator norm (unit-norm random inputs).
est = operator_norm_estimate("vgcphi", sym, 1.0, 1.0, grid,
                             sample_count=25, seed=1)
print("\nsampled operator-norm lower bound (vgcphi, alpha=beta=1):", est)
