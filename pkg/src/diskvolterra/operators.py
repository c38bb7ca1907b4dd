"""Volterra-type operators, composition products, and symbol machinery.

Two routes exist for every product operator: a series-to-series transform
(used to serialize images and to cross-validate), and pointwise evaluators
for the first/second derivatives assembled from the symbol derivatives,
which carry no composition-truncation error and therefore feed all norm
estimates near the boundary.
"""

from __future__ import annotations

import numpy as np

from .series import N_WORK, TruncatedSeries
from .spaces import DiskGrid, Weight, default_grid, golden_max, weighted_sup_norm

#: the four product-operator kinds
VGCPHI = "vgcphi"   # f -> integral_0^z f'(phi(s)) g(s) ds
CPHIVG = "cphivg"   # f -> integral_0^phi(z) f'(s) g(s) ds
CPHIUG = "cphiug"   # f -> integral_0^phi(z) f(s) g'(s) ds
UGCPHI = "ugcphi"   # f -> integral_0^z f(phi(s)) g'(s) ds
KINDS = (VGCPHI, CPHIVG, CPHIUG, UGCPHI)

#: self-map certificates may brush the unit circle by this much
SELF_MAP_TOL = 1e-9


class InvalidSelfMapError(ValueError):
    """The candidate inner symbol is not a self-map of the disk."""


def _as_complex(value) -> complex:
    if isinstance(value, (list, tuple)):
        return complex(value[0], value[1])
    return complex(value)


class SelfMapSymbol:
    """A validated analytic self-map phi together with an outer symbol g.

    The sup-modulus of phi over the circle |z| = r_max is certified at
    construction (by the maximum principle this bounds |phi| on the capped
    disk); candidates exceeding 1 + 1e-9 are rejected. First and second
    derivatives of both symbols are cached, as are per-grid value tables,
    so repeated criterion sweeps do not re-evaluate the series. Instances
    are immutable after construction.
    """

    def __init__(self, phi: TruncatedSeries, g: TruncatedSeries,
                 grid: DiskGrid | None = None):
        self.phi = phi
        self.g = g
        self.phi_d1 = phi.derivative()
        self.phi_d2 = self.phi_d1.derivative()
        self.g_d1 = g.derivative()
        self.g_d2 = self.g_d1.derivative()
        r_max = (grid or default_grid()).r_max
        self.phi_sup_modulus = self._certify(phi, r_max)
        if self.phi_sup_modulus > 1.0 + SELF_MAP_TOL:
            raise InvalidSelfMapError(
                f"sup |phi| = {self.phi_sup_modulus:.12g} on |z| = {r_max} "
                "exceeds 1; phi is not a self-map of the disk")
        self._grid_cache: dict = {}

    @staticmethod
    def _certify(phi: TruncatedSeries, r_max: float, n_angles: int = 4096) -> float:
        th = 2.0 * np.pi * np.arange(n_angles) / n_angles
        vals = np.abs(np.polynomial.polynomial.polyval(
            r_max * np.exp(1j * th), phi.coeffs))
        j = int(np.argmax(vals))
        best = float(vals[j])
        dth = 2.0 * np.pi / n_angles
        _, refined = golden_max(
            lambda t: abs(np.polynomial.polynomial.polyval(
                r_max * np.exp(1j * t), phi.coeffs)),
            th[j] - dth, th[j] + dth)
        return max(best, float(refined))

    # -- cached grid tables --------------------------------------------------

    def grid_values(self, grid: DiskGrid, key: str) -> np.ndarray:
        """Value table of a named symbol quantity over ``grid.points``.

        Keys: phi, phi1, phi2, g, g1, g2 (evaluated at z), g_phi, g1_phi,
        g2_phi (evaluated at phi(z)), abs_phi, and desc_order (the argsort
        of -|phi| over the flattened grid, shared by the sequence scans
        and the boundary filters).
        """
        ck = (id(grid), key)
        if ck in self._grid_cache:
            return self._grid_cache[ck]
        Z = grid.points
        if key == "phi":
            val = self.phi(Z)
        elif key == "phi1":
            val = self.phi_d1(Z)
        elif key == "phi2":
            val = self.phi_d2(Z)
        elif key == "g":
            val = self.g(Z)
        elif key == "g1":
            val = self.g_d1(Z)
        elif key == "g2":
            val = self.g_d2(Z)
        elif key in ("g_phi", "g1_phi", "g2_phi"):
            w = self.grid_values(grid, "phi")
            series = {"g_phi": self.g, "g1_phi": self.g_d1,
                      "g2_phi": self.g_d2}[key]
            val = series(w)
        elif key == "abs_phi":
            val = np.abs(self.grid_values(grid, "phi"))
        elif key == "desc_order":
            val = np.argsort(-self.grid_values(grid, "abs_phi").ravel(),
                             kind="stable")
        else:
            raise KeyError(key)
        self._grid_cache[ck] = val
        return val


# -- series route ------------------------------------------------------------


def apply_ug(sym: SelfMapSymbol, f: TruncatedSeries,
             n_work: int = N_WORK) -> TruncatedSeries:
    """integral from 0 to z of f * g'; vanishes at 0."""
    return f.mul(sym.g_d1, n_work).integrate()


def apply_vg(sym: SelfMapSymbol, f: TruncatedSeries,
             n_work: int = N_WORK) -> TruncatedSeries:
    """integral from 0 to z of f' * g; vanishes at 0."""
    return f.derivative().mul(sym.g, n_work).integrate()


def apply_product(kind: str, sym: SelfMapSymbol, f: TruncatedSeries,
                  n_work: int = N_WORK) -> TruncatedSeries:
    """Series form of the four composition products."""
    if kind == VGCPHI:
        return f.derivative().compose(sym.phi, n_work).mul(sym.g, n_work).integrate()
    if kind == UGCPHI:
        return f.compose(sym.phi, n_work).mul(sym.g_d1, n_work).integrate()
    if kind == CPHIUG:
        return apply_ug(sym, f, n_work).compose(sym.phi, n_work)
    if kind == CPHIVG:
        return apply_vg(sym, f, n_work).compose(sym.phi, n_work)
    raise ValueError(f"unknown operator kind {kind!r}")


# -- pointwise route ----------------------------------------------------------


def product_second_derivative(kind: str, sym: SelfMapSymbol,
                              f: TruncatedSeries, z):
    """Second derivative of the product operator image, evaluated pointwise.

    All factors come from cached symbol series evaluated at z (and f, f',
    f'' at phi(z)), so there is no composition-truncation error. Accepts
    scalars or arrays.
    """
    f1 = f.derivative()
    f2 = f1.derivative()
    w = sym.phi(z)
    if kind == VGCPHI:
        return sym.phi_d1(z) * sym.g(z) * f2(w) + sym.g_d1(z) * f1(w)
    if kind == UGCPHI:
        return sym.phi_d1(z) * sym.g_d1(z) * f1(w) + sym.g_d2(z) * f(w)
    if kind == CPHIVG:
        p1 = sym.phi_d1(z)
        return (sym.g(w) * p1 * p1 * f2(w)
                + (sym.g_d1(w) * p1 * p1 + sym.g(w) * sym.phi_d2(z)) * f1(w))
    if kind == CPHIUG:
        p1 = sym.phi_d1(z)
        return (sym.g_d1(w) * p1 * p1 * f1(w)
                + (sym.g_d2(w) * p1 * p1 + sym.g_d1(w) * sym.phi_d2(z)) * f(w))
    raise ValueError(f"unknown operator kind {kind!r}")


def _image_at_zero(kind: str, sym: SelfMapSymbol, f: TruncatedSeries,
                   n_work: int = N_WORK) -> tuple[complex, complex]:
    """(Tf)(0) and (Tf)'(0), exactly."""
    w0 = sym.phi(0.0)
    if kind == VGCPHI:
        return 0.0, f.derivative()(w0) * sym.g(0.0)
    if kind == UGCPHI:
        return 0.0, f(w0) * sym.g_d1(0.0)
    if kind == CPHIUG:
        return apply_ug(sym, f, n_work)(w0), f(w0) * sym.g_d1(w0) * sym.phi_d1(0.0)
    if kind == CPHIVG:
        return apply_vg(sym, f, n_work)(w0), f.derivative()(w0) * sym.g(w0) * sym.phi_d1(0.0)
    raise ValueError(f"unknown operator kind {kind!r}")


def image_zygmund_norm(kind: str, sym: SelfMapSymbol, f: TruncatedSeries,
                       beta: float, grid: DiskGrid | None = None) -> float:
    """Zygmund-type norm of the operator image via the pointwise route."""
    grid = grid or default_grid()
    v0, d0 = _image_at_zero(kind, sym, f)
    sup = weighted_sup_norm(lambda z: product_second_derivative(kind, sym, f, z),
                            Weight.standard(beta), grid)
    return abs(v0) + abs(d0) + sup.value


def operator_norm_estimate(kind: str, sym: SelfMapSymbol, alpha: float,
                           beta: float, grid: DiskGrid | None = None,
                           sample_count: int = 50, seed: int = 0,
                           max_degree: int = 32) -> float:
    """Lower bound on the operator norm by sampling random unit-norm inputs.

    Draws ``sample_count`` random polynomials of degree <= max_degree,
    normalizes each to unit Zygmund-type norm on the source side, and takes
    the max of the image norms (pointwise derivative route). Monotone
    non-decreasing in sample_count for a fixed seed.
    """
    if sample_count < 1:
        raise ValueError("sample_count must be >= 1")
    from .spaces import zygmund_norm  # local import to avoid cycle at module load
    grid = grid or default_grid()
    rng = np.random.default_rng(seed)
    best = 0.0
    for _ in range(sample_count):
        c = rng.standard_normal(max_degree + 1) + 1j * rng.standard_normal(max_degree + 1)
        f = TruncatedSeries(c)
        nf = zygmund_norm(f, alpha, grid)
        if nf == 0.0:
            continue
        best = max(best, image_zygmund_norm(kind, sym, f / nf, beta, grid))
    return best


# -- symbol weights for the characterizations ---------------------------------


class SymbolWeight:
    """A pointwise combination of g, phi and derivatives, e.g. g * phi'.

    Callable at arbitrary points; ``on_grid`` returns (and memoizes) the
    value table over a grid, assembled from the symbol's cached tables.
    """

    def __init__(self, label: str, pointwise, grid_fn):
        self.label = label
        self._pointwise = pointwise
        self._grid_fn = grid_fn
        self._memo: dict = {}

    def __call__(self, z):
        return self._pointwise(z)

    def on_grid(self, grid: DiskGrid) -> np.ndarray:
        key = id(grid)
        if key not in self._memo:
            self._memo[key] = self._grid_fn(grid)
        return self._memo[key]


def symbol_weights(kind: str, sym: SelfMapSymbol) -> dict[str, SymbolWeight]:
    """The two symbol weights (u1, u2) entering each operator's conditions."""
    gv = sym.grid_values
    if kind == VGCPHI:
        return {
            "u1": SymbolWeight("g*phi'",
                               lambda z: sym.g(z) * sym.phi_d1(z),
                               lambda gr: gv(gr, "g") * gv(gr, "phi1")),
            "u2": SymbolWeight("g'",
                               lambda z: sym.g_d1(z),
                               lambda gr: gv(gr, "g1")),
        }
    if kind == UGCPHI:
        return {
            "u1": SymbolWeight("g'*phi'",
                               lambda z: sym.g_d1(z) * sym.phi_d1(z),
                               lambda gr: gv(gr, "g1") * gv(gr, "phi1")),
            "u2": SymbolWeight("g''",
                               lambda z: sym.g_d2(z),
                               lambda gr: gv(gr, "g2")),
        }
    if kind == CPHIVG:
        return {
            "u1": SymbolWeight("g(phi)*phi'^2",
                               lambda z: sym.g(sym.phi(z)) * sym.phi_d1(z) ** 2,
                               lambda gr: gv(gr, "g_phi") * gv(gr, "phi1") ** 2),
            "u2": SymbolWeight("g'(phi)*phi'^2+g(phi)*phi''",
                               lambda z: (sym.g_d1(sym.phi(z)) * sym.phi_d1(z) ** 2
                                          + sym.g(sym.phi(z)) * sym.phi_d2(z)),
                               lambda gr: (gv(gr, "g1_phi") * gv(gr, "phi1") ** 2
                                           + gv(gr, "g_phi") * gv(gr, "phi2"))),
        }
    if kind == CPHIUG:
        return {
            "u1": SymbolWeight("g'(phi)*phi'^2",
                               lambda z: sym.g_d1(sym.phi(z)) * sym.phi_d1(z) ** 2,
                               lambda gr: gv(gr, "g1_phi") * gv(gr, "phi1") ** 2),
            "u2": SymbolWeight("g''(phi)*phi'^2+g'(phi)*phi''",
                               lambda z: (sym.g_d2(sym.phi(z)) * sym.phi_d1(z) ** 2
                                          + sym.g_d1(sym.phi(z)) * sym.phi_d2(z)),
                               lambda gr: (gv(gr, "g2_phi") * gv(gr, "phi1") ** 2
                                           + gv(gr, "g1_phi") * gv(gr, "phi2"))),
        }
    raise ValueError(f"unknown operator kind {kind!r}")


# -- symbol families from JSON -------------------------------------------------


def phi_from_config(spec: dict, n_work: int = N_WORK) -> TruncatedSeries:
    """Inner-symbol families: scaled_identity, mobius, poly."""
    family = spec.get("family")
    params = spec.get("params", {})
    if family == "scaled_identity":
        c = _as_complex(params.get("c", 1.0))
        return TruncatedSeries([0.0, c])
    if family == "mobius":
        a = _as_complex(params["a"])
        if not abs(a) < 1:
            raise ValueError("mobius parameter must satisfy |a| < 1")
        # (a - z)/(1 - conj(a) z): c_0 = a, c_k = conj(a)^(k-1) (|a|^2 - 1)
        k = np.arange(1, n_work + 1)
        coeffs = np.empty(n_work + 1, dtype=complex)
        coeffs[0] = a
        coeffs[1:] = np.conj(a) ** (k - 1) * (abs(a) ** 2 - 1.0)
        return TruncatedSeries(coeffs)
    if family == "poly":
        return TruncatedSeries([_as_complex(c) for c in params["coeffs"]])
    raise ValueError(f"unknown phi family {family!r}")


def g_from_config(spec: dict, n_work: int = N_WORK) -> TruncatedSeries:
    """Outer-symbol families: identity, log_cesaro, poly."""
    family = spec.get("family")
    params = spec.get("params", {})
    if family == "identity":
        return TruncatedSeries([0.0, 1.0])
    if family == "log_cesaro":
        # log(1/(1-z)) truncated: coefficients 1/k
        coeffs = np.zeros(n_work + 1, dtype=complex)
        coeffs[1:] = 1.0 / np.arange(1, n_work + 1)
        return TruncatedSeries(coeffs)
    if family == "poly":
        return TruncatedSeries([_as_complex(c) for c in params["coeffs"]])
    raise ValueError(f"unknown g family {family!r}")


def symbol_from_config(spec: dict, n_work: int = N_WORK,
                       grid: DiskGrid | None = None) -> SelfMapSymbol:
    """Build a SelfMapSymbol from {"phi": {...}, "g": {...}}."""
    return SelfMapSymbol(phi_from_config(spec["phi"], n_work),
                         g_from_config(spec["g"], n_work),
                         grid=grid)
