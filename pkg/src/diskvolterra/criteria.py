"""Boundedness criteria: scaled sequence suprema vs pointwise suprema.

Each operator kind and source exponent alpha selects a small set of
conditions on the symbol weights u1, u2. A condition has two comparable
sides: the sup over n of a scaled monomial-image norm
sup_z v(z) |u(z)| |phi(z)|^n, and the sup over the disk of the matching
pointwise expression. Both are computed for every condition; the verdict
is "bounded" when all required quantities are finite under the caps, and
"not-determined" when divergence evidence appears (numerics never certify
unboundedness).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .operators import CPHIVG, KINDS, VGCPHI, SelfMapSymbol, symbol_weights
from .spaces import (DiskGrid, SupEstimate, Weight, default_grid, grid_supremum,
                     one_minus_sq)

#: sequence divergence evidence: >= this growth across the trailing window
SEQUENCE_GROWTH_RATIO = 1.10

#: quantities above this cap are treated as not finite
FINITE_CAP = 1e8


def scale_label(scale: tuple) -> str:
    if scale[0] == "log":
        return "log(n)"
    return f"(n+1)^{scale[1]:g}"


def form_label(form: tuple) -> str:
    if form[0] == "log":
        return "log(2/(1-|phi|^2))"
    if form[1] == 0.0:
        return "1"
    return f"(1-|phi|^2)^-{form[1]:g}"


def conditions_for(kind: str, alpha: float):
    """Membership checks and scaled conditions demanded by each theorem case.

    Returns (membership_u_keys, [(u_key, scale), ...]) with scale either
    ("power", gamma) or ("log",). The V-type products (vgcphi, cphivg) have
    three alpha cases; the U-type products (cphiug, ugcphi) have five.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown operator kind {kind!r}")
    if not alpha > 0:
        raise ValueError("alpha must be positive")
    if kind in (VGCPHI, CPHIVG):
        if alpha < 1.0:
            return ["u2"], [("u1", ("power", alpha))]
        if alpha == 1.0:
            return [], [("u1", ("power", 1.0)), ("u2", ("log",))]
        return [], [("u1", ("power", alpha)), ("u2", ("power", alpha - 1.0))]
    if alpha < 1.0:
        return ["u1", "u2"], []
    if alpha == 1.0:
        return ["u2"], [("u1", ("log",))]
    if alpha < 2.0:
        return ["u2"], [("u1", ("power", alpha - 1.0))]
    if alpha == 2.0:
        return [], [("u1", ("power", 1.0)), ("u2", ("log",))]
    return [], [("u1", ("power", alpha - 1.0)), ("u2", ("power", alpha - 2.0))]


@dataclass
class SequenceScan:
    """Per-n values of sup_z v(z)|u(z)||phi(z)|^n with their scaling."""
    raw: np.ndarray = field(repr=False)
    scaled: np.ndarray = field(repr=False)
    scale: tuple
    sup: float
    n_at_sup: int
    at_cap: bool          # sup attained at n = N_seq
    growing: bool         # trailing-window growth beyond the evidence ratio

    @property
    def n_seq(self) -> int:
        return len(self.raw) - 1


def _pareto_front(A: np.ndarray, p: np.ndarray, order: np.ndarray):
    """Grid points that can realize max A * p**n for some n >= 0.

    With points sorted by p descending, a point survives iff its A exceeds
    every A seen at larger p. The survivors are what every n-scan needs.
    """
    As = A.ravel()[order]
    ps = p.ravel()[order]
    running = np.maximum.accumulate(np.concatenate(([-np.inf], As[:-1])))
    keep = As > running
    return As[keep], ps[keep]


def apply_scale(s: np.ndarray, scale: tuple) -> np.ndarray:
    """Scaled sequence values; the log scaling starts at n = 2 (rows 0 and 1
    carry 0 so that emitted tables stay finite)."""
    n = np.arange(len(s), dtype=float)
    if scale[0] == "power":
        return (n + 1.0) ** scale[1] * s
    out = np.zeros_like(s)
    if len(s) > 2:
        out[2:] = np.log(n[2:]) * s[2:]
    return out


def sequence_quantity(u, sym: SelfMapSymbol, weight: Weight, scale: tuple,
                      n_seq: int, grid: DiskGrid | None = None) -> SequenceScan:
    """Scan n = 0..n_seq of the scaled sequence quantity.

    The weighted symbol magnitude A(z) = v(z)|u(z)| and p(z) = |phi(z)| are
    evaluated once over the grid; the scan runs over the Pareto front of
    (p, A) only, which makes the cost O(grid + n_seq * front).
    """
    if n_seq < 1:
        raise ValueError("n_seq must be >= 1")
    grid = grid or default_grid()
    uvals = u.on_grid(grid) if hasattr(u, "on_grid") else u(grid.points)
    A = weight(grid.abs_points) * np.abs(uvals)
    p = sym.grid_values(grid, "abs_phi")
    order = sym.grid_values(grid, "desc_order")
    AA, pp = _pareto_front(A, p, order)

    s = np.empty(n_seq + 1)
    cur = AA.copy()
    for n in range(n_seq + 1):
        s[n] = cur.max() if cur.size else 0.0
        if n < n_seq:
            cur *= pp
    scaled = apply_scale(s, scale)
    n_at_sup = int(np.argmax(scaled))
    sup = float(scaled[n_at_sup])

    window = min(max(n_seq // 4, 8), n_seq)
    chunk = max(window // 8, 4)
    head = scaled[n_seq - window: n_seq - window + chunk]
    tail = scaled[n_seq + 1 - chunk: n_seq + 1]
    head_mean, tail_mean = float(np.mean(head)), float(np.mean(tail))
    growing = head_mean > 0 and tail_mean >= SEQUENCE_GROWTH_RATIO * head_mean
    return SequenceScan(raw=s, scaled=scaled, scale=scale, sup=sup,
                        n_at_sup=n_at_sup, at_cap=(n_at_sup == n_seq),
                        growing=growing)


def pointwise_quantity(u, sym: SelfMapSymbol, beta: float, form: tuple,
                       grid: DiskGrid | None = None) -> SupEstimate:
    """sup over the disk of (1-|z|^2)^beta |u(z)| * F(|phi(z)|).

    F is (1-w^2)^-gamma for form ("power", gamma) or log(2/(1-w^2)) for
    form ("log",). The coarse pass reuses cached grid tables; refinement
    evaluates the closed forms pointwise. The returned estimate carries
    divergence evidence when the sup sits on the outermost shells and still
    grows there.
    """
    grid = grid or default_grid()

    def factor(absphi):
        y = one_minus_sq(absphi)
        if form[0] == "log":
            return np.log(2.0 / y)
        if form[1] == 0.0:
            return np.ones_like(y)
        return y ** (-form[1])

    uvals = u.on_grid(grid) if hasattr(u, "on_grid") else u(grid.points)
    table = (one_minus_sq(grid.abs_points) ** beta * np.abs(uvals)
             * factor(sym.grid_values(grid, "abs_phi")))

    def magnitude(z):
        return (one_minus_sq(np.abs(z)) ** beta * np.abs(u(z))
                * factor(np.abs(sym.phi(z))))

    return grid_supremum(magnitude, grid, grid_values=table)


@dataclass
class MembershipCheck:
    """A weighted-sup-norm finiteness check, e.g. u2 in the target space."""
    label: str
    norm: float
    diverging: bool

    @property
    def finite(self) -> bool:
        return (not self.diverging) and self.norm <= FINITE_CAP


@dataclass
class CriterionQuantity:
    """Both sides of one scaled condition with their comparability ratio."""
    label: str
    u_label: str
    scale: tuple
    sequence_side: float
    pointwise_side: float
    ratio: float | None
    n_at_sup: int
    sequence_at_cap: bool
    sequence_growing: bool
    pointwise_diverging: bool
    scan: SequenceScan = field(repr=False, compare=False)
    sup_estimate: SupEstimate = field(repr=False, compare=False)

    @property
    def divergence_evidence(self) -> bool:
        return (self.pointwise_diverging
                or (self.sequence_at_cap and self.sequence_growing)
                or self.sequence_side > FINITE_CAP
                or self.pointwise_side > FINITE_CAP)


@dataclass
class CriterionReport:
    kind: str
    alpha: float
    beta: float
    quantities: list
    memberships: list
    verdict: str          # "bounded" or "not-determined"


def check_boundedness(kind: str, sym: SelfMapSymbol, alpha: float, beta: float,
                      grid: DiskGrid | None = None, n_seq: int = 4096) -> CriterionReport:
    """Evaluate the boundedness characterization for one operator.

    Assembles exactly the membership checks and scaled conditions the
    relevant theorem case demands, computes both sides of every condition,
    and issues the verdict.
    """
    if not beta > 0:
        raise ValueError("beta must be positive")
    grid = grid or default_grid()
    mem_keys, cond_specs = conditions_for(kind, alpha)
    weights = symbol_weights(kind, sym)
    v_beta = Weight.standard(beta)

    memberships = []
    for key in mem_keys:
        u = weights[key]
        est = pointwise_quantity(u, sym, beta, ("power", 0.0), grid)
        memberships.append(MembershipCheck(
            label=f"{u.label} in weighted-sup space (beta={beta:g})",
            norm=est.value, diverging=est.diverging))

    quantities = []
    for key, scale in cond_specs:
        u = weights[key]
        form = ("log",) if scale[0] == "log" else ("power", scale[1])
        scan = sequence_quantity(u, sym, v_beta, scale, n_seq, grid)
        est = pointwise_quantity(u, sym, beta, form, grid)
        ratio = scan.sup / est.value if est.value > 0.0 else None
        quantities.append(CriterionQuantity(
            label=f"sup_n {scale_label(scale)} ||({u.label}) phi^n||  ~  "
                  f"sup_z (1-|z|^2)^{beta:g} {form_label(form)} |{u.label}|",
            u_label=u.label, scale=scale,
            sequence_side=scan.sup, pointwise_side=est.value, ratio=ratio,
            n_at_sup=scan.n_at_sup, sequence_at_cap=scan.at_cap,
            sequence_growing=scan.growing, pointwise_diverging=est.diverging,
            scan=scan, sup_estimate=est))

    ok = (all(m.finite for m in memberships)
          and all(not q.divergence_evidence for q in quantities))
    return CriterionReport(kind=kind, alpha=float(alpha), beta=float(beta),
                           quantities=quantities, memberships=memberships,
                           verdict="bounded" if ok else "not-determined")
