"""Essential-norm estimators: tail limsups and boundary concentration.

For a bounded operator the essential norm is comparable to a max of scaled
limsups of the sequence quantities; each is estimated here as the max over
a trailing window of n, with the window trend reported, and cross-checked
by the boundary route: the sup of the matching pointwise expression over
the region |phi(z)| > 1 - eps for a shrinking eps ladder. Operators whose
theorem value is identically zero (the U-type products with source
exponent below 1) return exactly 0 alongside the diagnostics.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .criteria import (CriterionReport, check_boundedness, conditions_for,
                       form_label, scale_label, sequence_quantity)
from .operators import CPHIUG, UGCPHI, SelfMapSymbol, symbol_weights
from .spaces import DiskGrid, Weight, default_grid, one_minus_sq

#: combined estimate below this is flagged compact
COMPACT_TOL = 1e-3

#: eps ladder 2^-k for the boundary-concentration filter
EPS_LADDER_RANGE = (3, 20)


class OperatorNotBoundedError(ValueError):
    """Essential norms are only defined for operators certified bounded."""


def essnorm_conditions(kind: str, alpha: float):
    """(theorem_zero, [(u_key, scale, diagnostic_only), ...]) per case."""
    if kind in (CPHIUG, UGCPHI) and alpha < 1.0:
        # theorem value is exactly zero; diagnostics use the negative-power
        # continuation of the alpha>1 scalings, which decay for bounded symbols
        return True, [("u1", ("power", alpha - 1.0), True),
                      ("u2", ("power", alpha - 2.0), True)]
    _, cond_specs = conditions_for(kind, alpha)
    return False, [(key, scale, False) for key, scale in cond_specs]


@dataclass
class BoundaryScan:
    """Boundary-concentration sups over the eps ladder."""
    eps: list
    sups: list
    nonempty: list
    estimate: float
    trend: str            # "increasing" / "decreasing" / "flat" / "empty"


def sequence_limsup(u, sym: SelfMapSymbol, weight: Weight, scale: tuple,
                    n_seq: int, window: int | None = None,
                    grid: DiskGrid | None = None):
    """Tail estimate of the scaled sequence quantity.

    Returns (estimate, trend_slope, extrapolated, scan): the estimate is the
    max over the last ``window`` indices (default: final quarter), the trend
    is the least-squares slope over that window, and for log scalings an
    a + b/log(n) fit is additionally reported because that convergence is
    O(1/log n) rather than O(1/n).
    """
    grid = grid or default_grid()
    if window is None:
        window = max(n_seq // 4, 8)
    if window >= n_seq:
        raise ValueError("window must be smaller than n_seq")
    scan = sequence_quantity(u, sym, weight, scale, n_seq, grid)
    ns = np.arange(n_seq - window, n_seq + 1)
    vals = scan.scaled[ns]
    estimate = float(np.max(vals))
    trend = float(np.polyfit(ns.astype(float), vals, 1)[0])
    extrapolated = None
    if scale[0] == "log":
        x = 1.0 / np.log(ns.astype(float))
        coef, *_ = np.linalg.lstsq(np.vstack([np.ones_like(x), x]).T, vals,
                                   rcond=None)
        extrapolated = float(coef[0])
    return estimate, trend, extrapolated, scan


def boundary_limsup(u, sym: SelfMapSymbol, beta: float, form: tuple,
                    grid: DiskGrid | None = None,
                    eps_range: tuple = EPS_LADDER_RANGE) -> BoundaryScan:
    """Sups of the pointwise expression over {z : |phi(z)| > 1 - eps}.

    Reuses the precomputed grid tables: values are sorted once by |phi|
    descending, so every eps filter is a prefix max. Empty prefixes (the
    compact case ||phi|| < 1) contribute 0. The estimate is the max over
    the last three nonempty rungs, annotated with their trend.
    """
    grid = grid or default_grid()
    uvals = u.on_grid(grid) if hasattr(u, "on_grid") else u(grid.points)
    absphi = sym.grid_values(grid, "abs_phi")
    y = one_minus_sq(absphi)
    factor = np.log(2.0 / y) if form[0] == "log" else y ** (-form[1])
    expr = one_minus_sq(grid.abs_points) ** beta * np.abs(uvals) * factor

    order = sym.grid_values(grid, "desc_order")
    w_sorted = absphi.ravel()[order]
    prefix_max = np.maximum.accumulate(expr.ravel()[order])

    eps = [2.0 ** (-k) for k in range(eps_range[0], eps_range[1] + 1)]
    sups, nonempty = [], []
    for e in eps:
        count = int(np.searchsorted(-w_sorted, -(1.0 - e), side="left"))
        nonempty.append(count > 0)
        sups.append(float(prefix_max[count - 1]) if count > 0 else 0.0)

    live = [s for s, ne in zip(sups, nonempty) if ne]
    if not live:
        return BoundaryScan(eps, sups, nonempty, 0.0, "empty")
    tail = live[-3:]
    estimate = max(tail)
    if len(tail) >= 2 and tail[-1] > tail[0] * (1.0 + 1e-12):
        trend = "increasing"
    elif len(tail) >= 2 and tail[-1] < tail[0] * (1.0 - 1e-12):
        trend = "decreasing"
    else:
        trend = "flat"
    return BoundaryScan(eps, sups, nonempty, estimate, trend)


@dataclass
class ConditionEstimate:
    label: str
    u_label: str
    scale: tuple
    diagnostic_only: bool
    sequence_estimate: float
    sequence_trend: float
    sequence_extrapolated: float | None
    boundary: BoundaryScan
    scan: object = field(repr=False, compare=False)


@dataclass
class EssNormEstimate:
    kind: str
    alpha: float
    beta: float
    conditions: list
    combined: float
    compact_flag: bool
    theorem_zero: bool


def essential_norm(kind: str, sym: SelfMapSymbol, alpha: float, beta: float,
                   grid: DiskGrid | None = None, n_seq: int = 4096,
                   window: int | None = None, compact_tol: float = COMPACT_TOL,
                   boundedness: CriterionReport | None = None) -> EssNormEstimate:
    """Estimate the essential norm of a bounded product operator.

    Refuses (OperatorNotBoundedError) unless boundedness is established:
    pass a precomputed CriterionReport or one is computed here. The
    combined estimate is the max over the case's scaled sequence limsups;
    the boundary route rides along per condition for cross-checking.
    """
    grid = grid or default_grid()
    report = boundedness or check_boundedness(kind, sym, alpha, beta, grid,
                                              n_seq=n_seq)
    if report.verdict != "bounded":
        raise OperatorNotBoundedError(
            f"boundedness of {kind} (alpha={alpha:g}, beta={beta:g}) is not "
            "established; essential-norm estimates assume a bounded operator")

    theorem_zero, specs = essnorm_conditions(kind, alpha)
    weights = symbol_weights(kind, sym)
    v_beta = Weight.standard(beta)

    conditions = []
    for key, scale, diagnostic in specs:
        u = weights[key]
        est, trend, extrap, scan = sequence_limsup(u, sym, v_beta, scale,
                                                   n_seq, window, grid)
        form = ("log",) if scale[0] == "log" else ("power", scale[1])
        bscan = boundary_limsup(u, sym, beta, form, grid)
        conditions.append(ConditionEstimate(
            label=f"limsup {scale_label(scale)} ||({u.label}) phi^n||  ~  "
                  f"boundary sup (1-|z|^2)^{beta:g} {form_label(form)} |{u.label}|",
            u_label=u.label, scale=scale, diagnostic_only=diagnostic,
            sequence_estimate=est, sequence_trend=trend,
            sequence_extrapolated=extrap, boundary=bscan, scan=scan))

    if theorem_zero:
        combined = 0.0
    else:
        combined = max((c.sequence_estimate for c in conditions
                        if not c.diagnostic_only), default=0.0)
    return EssNormEstimate(kind=kind, alpha=float(alpha), beta=float(beta),
                           conditions=conditions, combined=combined,
                           compact_flag=combined < compact_tol,
                           theorem_zero=theorem_zero)
