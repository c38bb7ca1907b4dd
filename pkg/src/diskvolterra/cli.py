"""Command-line front end: experiments, sweeps, and CSV/JSON reports.

Subcommands
-----------
lemma25         monomial-norm asymptotics for standard and log weights
norms           Zygmund/Bloch/weighted norms of the configured symbols
verify-testfns  claim report for the boundary test-function families
identities      seeded property suite over the operator algebra
criterion       boundedness report for one operator
essnorm         essential-norm estimate for one operator
sweep           full grid of criterion + essential-norm reports

Exit codes: 0 success, 1 invariant failure, 2 configuration error.
All outputs are deterministic for a fixed config and seed: reports carry
no timestamps, floats are emitted with shortest-repr, keys are sorted.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from pathlib import Path

import numpy as np

from .criteria import CriterionReport, check_boundedness
from .essnorm import (EssNormEstimate, OperatorNotBoundedError, essential_norm)
from .operators import (KINDS, SelfMapSymbol, apply_product, apply_ug, apply_vg,
                        product_second_derivative, symbol_from_config)
from .series import N_WORK, TruncatedSeries
from .spaces import DiskGrid, Weight, bloch_norm, monomial_norm, weighted_sup_norm, zygmund_norm
from .testfns import verify_family_claims

MAX_CHECKPOINT = 10 ** 7

#: checkpoints within this factor of the largest enter the a + b/log n fit
LOG_FIT_SPAN = 100.0

DEFAULT_SWEEP_CONFIG = {
    "kinds": list(KINDS),
    "phis": [
        {"family": "scaled_identity", "params": {"c": 1.0}},
        {"family": "scaled_identity", "params": {"c": 0.5}},
        {"family": "mobius", "params": {"a": 0.5}},
        {"family": "poly", "params": {"coeffs": [0.0, 0.0, 1.0]}},
    ],
    "gs": [
        {"family": "identity"},
        {"family": "poly", "params": {"coeffs": [0.0, 0.0, 1.0]}},
        {"family": "log_cesaro"},
    ],
    "alphas": [0.5, 1.0, 1.5, 2.0, 2.5],
    "betas": [0.5, 1.0, 1.5, 2.0, 2.5],
    "nseq": 4096,
    "nwork": N_WORK,
    "seed": 42,
    "compact_tol": 1e-3,
    "grid": {},
}


class ConfigError(ValueError):
    """Invalid or missing configuration."""


# -- serialization helpers -----------------------------------------------------


def _jsonable(obj):
    """Recursive conversion to JSON-safe values; complex becomes [re, im]."""
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    if isinstance(obj, (np.complexfloating,)):
        return [float(obj.real), float(obj.imag)]
    if isinstance(obj, (np.floating, np.integer)):
        return obj.item()
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.ndarray):
        return [_jsonable(x) for x in obj.tolist()]
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    return obj


def write_json(path: Path, payload) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(_jsonable(payload), fh, indent=2, sort_keys=True)
        fh.write("\n")


def write_csv(path: Path, header: list, rows) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)


def criterion_report_dict(report: CriterionReport) -> dict:
    return {
        "kind": report.kind,
        "alpha": report.alpha,
        "beta": report.beta,
        "verdict": report.verdict,
        "memberships": [
            {"label": m.label, "norm": m.norm, "diverging": bool(m.diverging),
             "finite": m.finite}
            for m in report.memberships
        ],
        "quantities": [
            {"label": q.label, "u": q.u_label, "scale": list(q.scale),
             "sequence_side": q.sequence_side, "pointwise_side": q.pointwise_side,
             "ratio": q.ratio, "n_at_sup": q.n_at_sup,
             "sequence_at_cap": bool(q.sequence_at_cap),
             "sequence_growing": bool(q.sequence_growing),
             "pointwise_diverging": bool(q.pointwise_diverging),
             "pointwise_argmax": complex(q.sup_estimate.argmax),
             "divergence_evidence": bool(q.divergence_evidence)}
            for q in report.quantities
        ],
    }


def essnorm_dict(est: EssNormEstimate) -> dict:
    return {
        "kind": est.kind,
        "alpha": est.alpha,
        "beta": est.beta,
        "combined": est.combined,
        "compact_flag": bool(est.compact_flag),
        "theorem_zero": bool(est.theorem_zero),
        "conditions": [
            {"label": c.label, "u": c.u_label, "scale": list(c.scale),
             "diagnostic_only": bool(c.diagnostic_only),
             "sequence_estimate": c.sequence_estimate,
             "sequence_trend": c.sequence_trend,
             "sequence_extrapolated": c.sequence_extrapolated,
             "boundary_estimate": c.boundary.estimate,
             "boundary_trend": c.boundary.trend,
             "boundary_ladder": [[e, s] for e, s in zip(c.boundary.eps, c.boundary.sups)]}
            for c in est.conditions
        ],
    }


# -- config plumbing -----------------------------------------------------------


def load_json_config(path: str | None) -> dict:
    if path is None:
        raise ConfigError("this subcommand requires --config")
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError as exc:
        raise ConfigError(f"config file not found: {path}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config file is not valid JSON: {exc}") from exc


def grid_from_args(args, cfg: dict | None = None) -> DiskGrid:
    grid_cfg = dict((cfg or {}).get("grid", {}))
    if args.grid_angles is not None:
        grid_cfg["angles"] = args.grid_angles
    if args.jmax is not None:
        grid_cfg["j_max"] = args.jmax
    try:
        return DiskGrid.from_config(grid_cfg)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def symbol_from_file(args, n_work: int, grid: DiskGrid) -> SelfMapSymbol:
    cfg = load_json_config(args.config)
    if "phi" not in cfg or "g" not in cfg:
        raise ConfigError('symbol config must contain "phi" and "g" entries')
    try:
        return symbol_from_config(cfg, n_work=n_work, grid=grid)
    except (KeyError, ValueError) as exc:
        raise ConfigError(f"bad symbol config: {exc}") from exc


def _parse_floats(text: str) -> list:
    try:
        values = [float(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise ConfigError(f"expected comma-separated numbers, got {text!r}") from exc
    if not values:
        raise ConfigError("empty numeric list")
    return values


def _parse_ints(text: str) -> list:
    return [int(round(x)) for x in _parse_floats(text)]


# -- lemma25 -------------------------------------------------------------------


def lemma25_log_fit(checkpoints, values) -> dict:
    """Least-squares a + b/log(n) over the top factor-LOG_FIT_SPAN checkpoints."""
    ns = np.asarray(checkpoints, dtype=float)
    vs = np.asarray(values, dtype=float)
    cut = ns.max() / LOG_FIT_SPAN
    mask = ns >= cut
    if mask.sum() < 3:
        mask = np.argsort(ns) >= len(ns) - 3
    x = 1.0 / np.log(ns[mask])
    coef, *_ = np.linalg.lstsq(np.vstack([np.ones_like(x), x]).T, vs[mask],
                               rcond=None)
    return {"a": float(coef[0]), "b": float(coef[1]),
            "fit_checkpoints": [int(n) for n in ns[mask]]}


def run_lemma25(alphas, checkpoints, out_dir: Path) -> dict:
    """Monomial-norm asymptotics tables; returns the summary dict.

    Writes lemma25_standard.csv with (alpha, n, scaled, target, rel_error)
    rows, lemma25_log.csv with (n, scaled) rows, and lemma25_log_fit.json
    with the a + b/log n extrapolation.
    """
    if not alphas:
        raise ConfigError("alpha list must be non-empty")
    if not checkpoints:
        raise ConfigError("checkpoint list must be non-empty")
    if max(checkpoints) > MAX_CHECKPOINT:
        raise ConfigError(f"checkpoints are capped at {MAX_CHECKPOINT}")
    if min(checkpoints) < 1:
        raise ConfigError("checkpoints must be >= 1")

    std_rows = []
    standard = {}
    for alpha in alphas:
        target = (2.0 * alpha / math.e) ** alpha
        w = Weight.standard(alpha)
        per_n = {}
        for n in checkpoints:
            scaled = (n + 1.0) ** alpha * monomial_norm(n, w)
            per_n[n] = scaled
            std_rows.append([alpha, n, repr(scaled), repr(target),
                             repr(scaled / target - 1.0)])
        standard[alpha] = {"target": target, "scaled": per_n}

    wlog = Weight.logarithmic()
    log_rows = []
    log_values = {}
    for n in checkpoints:
        scaled = (math.log(n) * monomial_norm(n, wlog)) if n >= 2 else 0.0
        log_values[n] = scaled
        log_rows.append([n, repr(scaled)])
    fit_ns = [n for n in checkpoints if n >= 2]
    fit = lemma25_log_fit(fit_ns, [log_values[n] for n in fit_ns])

    write_csv(out_dir / "lemma25_standard.csv",
              ["alpha", "n", "scaled", "target", "rel_error"], std_rows)
    write_csv(out_dir / "lemma25_log.csv", ["n", "scaled"], log_rows)
    write_json(out_dir / "lemma25_log_fit.json", fit)
    return {"standard": standard, "log": log_values, "log_fit": fit}


# -- identities ----------------------------------------------------------------


def run_identity_suite(seed: int, count: int, grid: DiskGrid | None = None) -> dict:
    """Seeded property suite over the operator algebra.

    Checks, on ``count`` random draws each: the integration-by-parts
    identity on coefficients, derivative-of-antiderivative round trip,
    pointwise product against evaluated factors, the closed-form second
    derivative against finite differences of the series route, and norm
    homogeneity. Deterministic for a fixed seed.
    """
    if count < 1:
        raise ConfigError("count must be >= 1")
    from .spaces import default_grid
    grid = grid or default_grid()
    rng = np.random.default_rng(seed)

    def rand_series(deg, scale=1.0):
        c = rng.standard_normal(deg + 1) + 1j * rng.standard_normal(deg + 1)
        return TruncatedSeries(scale * c)

    report = {}

    err = 0.0
    for _ in range(count):
        f = rand_series(32)
        gs = rand_series(32)
        sym = SelfMapSymbol(TruncatedSeries([0.0, 0.5]), gs, grid=grid)
        lhs = apply_ug(sym, f) + apply_vg(sym, f)
        rhs = f.mul(gs) - f.coefficient(0) * gs.coefficient(0)
        n = max(len(lhs), len(rhs))
        diff = np.zeros(n, complex)
        diff[:len(lhs)] = lhs.coeffs
        diff[:len(rhs)] -= rhs.coeffs
        err = max(err, float(np.max(np.abs(diff))))
    report["integration_by_parts"] = {"max_error": err, "tolerance": 1e-12,
                                      "passed": err <= 1e-12, "count": count}

    err = 0.0
    for _ in range(count):
        s = rand_series(24)
        rt = s.integrate().derivative()
        n = max(len(s), len(rt))
        a = np.zeros(n, complex); a[:len(s)] = s.coeffs
        b = np.zeros(n, complex); b[:len(rt)] = rt.coeffs
        denom = 1.0 + float(np.max(np.abs(a)))
        err = max(err, float(np.max(np.abs(a - b))) / denom)
    report["derivative_of_antiderivative"] = {"max_error": err, "tolerance": 1e-14,
                                              "passed": err <= 1e-14, "count": count}

    err = 0.0
    for _ in range(count):
        a = rand_series(10)
        b = rand_series(10)
        z = complex(0.3, 0.2)
        err = max(err, abs(a.mul(b)(z) - a(z) * b(z)))
    report["product_pointwise"] = {"max_error": err, "tolerance": 1e-10,
                                   "passed": err <= 1e-10, "count": count}

    err = 0.0
    h = 1e-4
    pts_rng = np.random.default_rng(seed + 1)
    for _ in range(count):
        f = rand_series(8, scale=0.5)
        phi = rand_series(8)
        phi = phi / (2.0 * phi.l1() + 1e-9)  # certified self-map
        gs = rand_series(8, scale=0.5)
        sym = SelfMapSymbol(phi, gs, grid=grid)
        kind = KINDS[pts_rng.integers(0, 4)]
        F = apply_product(kind, sym, f)
        z = 0.4 * pts_rng.uniform(0.2, 1.0) * np.exp(2j * np.pi * pts_rng.uniform())
        fd = (F(z + h) - 2.0 * F(z) + F(z - h)) / h ** 2
        err = max(err, abs(product_second_derivative(kind, sym, f, z) - fd))
    report["second_derivative_vs_series"] = {"max_error": err, "tolerance": 1e-6,
                                             "passed": err <= 1e-6, "count": count}

    err = 0.0
    for _ in range(min(count, 20)):
        f = rand_series(16)
        c = complex(pts_rng.standard_normal(), pts_rng.standard_normal())
        if abs(c) < 1e-3:
            c = 1.0 + 0.5j
        n1 = zygmund_norm(f * c, 1.5, grid)
        n2 = abs(c) * zygmund_norm(f, 1.5, grid)
        err = max(err, abs(n1 - n2) / n2)
    report["norm_homogeneity"] = {"max_error": err, "tolerance": 1e-10,
                                  "passed": err <= 1e-10,
                                  "count": min(count, 20)}

    report["all_passed"] = all(v["passed"] for k, v in report.items()
                               if isinstance(v, dict))
    report["seed"] = seed
    return report


# -- norms ---------------------------------------------------------------------


def run_norms(sym: SelfMapSymbol, alphas, grid: DiskGrid, out_dir: Path) -> dict:
    """Norm tables for the configured symbols across the alpha list."""
    if not alphas:
        raise ConfigError("alpha list must be non-empty")
    out = {}
    for alpha in alphas:
        v = Weight.standard(alpha)
        out[f"alpha={alpha:g}"] = {
            "zygmund_g": zygmund_norm(sym.g, alpha, grid),
            "zygmund_phi": zygmund_norm(sym.phi, alpha, grid),
            "bloch_g": bloch_norm(sym.g, alpha, grid),
            "bloch_phi": bloch_norm(sym.phi, alpha, grid),
            "weighted_sup_g": weighted_sup_norm(sym.g, v, grid).value,
            "weighted_sup_g1": weighted_sup_norm(sym.g_d1, v, grid).value,
            "weighted_sup_g2": weighted_sup_norm(sym.g_d2, v, grid).value,
            "weighted_sup_phi1": weighted_sup_norm(sym.phi_d1, v, grid).value,
            "weighted_sup_phi2": weighted_sup_norm(sym.phi_d2, v, grid).value,
        }
    out["phi_sup_modulus"] = sym.phi_sup_modulus
    write_json(out_dir / "norms.json", out)
    return out


# -- criterion / essnorm -------------------------------------------------------


def _write_condition_csvs(prefix: Path, quantities) -> None:
    for idx, q in enumerate(quantities, start=1):
        scan = q.scan
        rows = [[n, repr(float(scan.raw[n])), repr(float(scan.scaled[n]))]
                for n in range(len(scan.raw))]
        write_csv(Path(f"{prefix}_cond{idx}.csv"), ["n", "s_n", "scaled_s_n"], rows)


def run_criterion(kind, sym, alpha, beta, grid, n_seq, out_dir: Path):
    report = check_boundedness(kind, sym, alpha, beta, grid, n_seq=n_seq)
    stem = out_dir / f"criterion_{kind}_alpha{alpha:g}_beta{beta:g}"
    write_json(Path(f"{stem}.json"), criterion_report_dict(report))
    _write_condition_csvs(stem, report.quantities)
    return report


def run_essnorm(kind, sym, alpha, beta, grid, n_seq, out_dir: Path):
    est = essential_norm(kind, sym, alpha, beta, grid, n_seq=n_seq)
    stem = out_dir / f"essnorm_{kind}_alpha{alpha:g}_beta{beta:g}"
    write_json(Path(f"{stem}.json"), essnorm_dict(est))
    for idx, c in enumerate(est.conditions, start=1):
        rows = [[n, repr(float(c.scan.scaled[n]))] for n in range(len(c.scan.scaled))]
        write_csv(Path(f"{stem}_cond{idx}_sequence.csv"), ["n", "scaled_s_n"], rows)
        brows = [[repr(e), repr(s)] for e, s in zip(c.boundary.eps, c.boundary.sups)]
        write_csv(Path(f"{stem}_cond{idx}_boundary.csv"), ["eps", "sup"], brows)
    return est


# -- sweep ---------------------------------------------------------------------


def _validate_sweep_config(cfg: dict) -> dict:
    merged = dict(DEFAULT_SWEEP_CONFIG)
    merged.update(cfg)
    for key in ("kinds", "phis", "gs", "alphas", "betas"):
        if not merged.get(key):
            raise ConfigError(f"sweep config entry {key!r} must be non-empty")
    for kind in merged["kinds"]:
        if kind not in KINDS:
            raise ConfigError(f"unknown operator kind {kind!r}")
    for alpha in list(merged["alphas"]) + list(merged["betas"]):
        if not alpha > 0:
            raise ConfigError("alphas and betas must be positive")
    if int(merged["nseq"]) < 2:
        raise ConfigError("nseq must be >= 2")
    return merged


SWEEP_HEADER = ["kind", "alpha", "beta", "phi_family", "g_family",
                "cond1_label", "cond1_sequence", "cond1_pointwise", "cond1_ratio",
                "cond2_label", "cond2_sequence", "cond2_pointwise", "cond2_ratio",
                "memberships_finite", "verdict", "essnorm_combined",
                "compact_flag", "error"]


def run_sweep(cfg: dict, out_dir: Path) -> list:
    """Criterion + essential-norm reports for every sweep cell.

    One JSON pair per cell plus a summary CSV. Per-cell failures are
    recorded in the row's error column and the run continues. Output is
    byte-identical across reruns with the same config.
    """
    cfg = _validate_sweep_config(cfg)
    grid = DiskGrid.from_config(cfg.get("grid", {}))
    n_seq = int(cfg["nseq"])
    n_work = int(cfg["nwork"])
    compact_tol = float(cfg["compact_tol"])
    out_dir.mkdir(parents=True, exist_ok=True)

    symbols = {}
    for pi, phi_spec in enumerate(cfg["phis"]):
        for gi, g_spec in enumerate(cfg["gs"]):
            symbols[(pi, gi)] = symbol_from_config(
                {"phi": phi_spec, "g": g_spec}, n_work=n_work, grid=grid)

    rows = []
    cell = 0
    for pi, phi_spec in enumerate(cfg["phis"]):
        for gi, g_spec in enumerate(cfg["gs"]):
            sym = symbols[(pi, gi)]
            for kind in cfg["kinds"]:
                for alpha in cfg["alphas"]:
                    for beta in cfg["betas"]:
                        cell += 1
                        row = [kind, repr(float(alpha)), repr(float(beta)),
                               phi_spec["family"], g_spec["family"]]
                        error = ""
                        try:
                            report = check_boundedness(kind, sym, alpha, beta,
                                                       grid, n_seq=n_seq)
                            stem = out_dir / (f"cell{cell:05d}_{kind}"
                                              f"_phi{pi}_g{gi}"
                                              f"_a{alpha:g}_b{beta:g}")
                            write_json(Path(f"{stem}_criterion.json"),
                                       criterion_report_dict(report))
                            for slot in range(2):
                                if slot < len(report.quantities):
                                    q = report.quantities[slot]
                                    row += [q.u_label, repr(q.sequence_side),
                                            repr(q.pointwise_side),
                                            "" if q.ratio is None else repr(q.ratio)]
                                else:
                                    row += ["", "", "", ""]
                            row.append(str(all(m.finite for m in report.memberships)))
                            row.append(report.verdict)
                            if report.verdict == "bounded":
                                est = essential_norm(kind, sym, alpha, beta, grid,
                                                     n_seq=n_seq,
                                                     compact_tol=compact_tol,
                                                     boundedness=report)
                                write_json(Path(f"{stem}_essnorm.json"),
                                           essnorm_dict(est))
                                row += [repr(est.combined), str(est.compact_flag)]
                            else:
                                row += ["", ""]
                                error = "essential norm skipped: boundedness not established"
                        except (OperatorNotBoundedError, ValueError) as exc:
                            while len(row) < len(SWEEP_HEADER) - 1:
                                row.append("")
                            error = str(exc)
                        row.append(error)
                        rows.append(row)
    write_csv(out_dir / "summary.csv", SWEEP_HEADER, rows)
    write_json(out_dir / "config_echo.json", cfg)
    return rows


# -- argument parsing ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=None, help="JSON config path")
    common.add_argument("--out", default="out", help="output directory")
    common.add_argument("--seed", type=int, default=42)
    common.add_argument("--nseq", type=int, default=4096)
    common.add_argument("--nwork", type=int, default=N_WORK)
    common.add_argument("--grid-angles", type=int, default=None)
    common.add_argument("--jmax", type=int, default=None)

    parser = argparse.ArgumentParser(
        prog="diskvolterra",
        description="Volterra-composition operators between Zygmund-type "
                    "spaces: boundedness criteria and essential norms")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lemma25", parents=[common],
                       help="monomial-norm asymptotics tables")
    p.add_argument("--alphas", default="0.5,1,2")
    p.add_argument("--checkpoints",
                   default="10,100,1000,10000,100000,316228,1000000,3162278,10000000")

    sub.add_parser("identities", parents=[common],
                   help="seeded operator-algebra property suite").add_argument(
        "--count", type=int, default=100)

    p = sub.add_parser("norms", parents=[common],
                       help="norm tables for the configured symbols")
    p.add_argument("--alphas", default="0.5,1,1.5,2,2.5")

    p = sub.add_parser("verify-testfns", parents=[common],
                       help="claim report for the test-function families")
    p.add_argument("--a-grid", default="0.6,0.7,0.8,0.9,0.95,0.99")
    p.add_argument("--alphas", default="0.5,1,1.5,2")

    for name in ("criterion", "essnorm"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("--op", required=True, choices=KINDS)
        p.add_argument("--alpha", type=float, required=True)
        p.add_argument("--beta", type=float, required=True)

    sub.add_parser("sweep", parents=[common],
                   help="criterion + essnorm over the full symbol/exponent grid")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out_dir = Path(args.out)
    try:
        if args.command == "lemma25":
            summary = run_lemma25(_parse_floats(args.alphas),
                                  _parse_ints(args.checkpoints), out_dir)
            print(f"lemma25: wrote tables to {out_dir} "
                  f"(log fit a = {summary['log_fit']['a']:.4f})")
            return 0

        if args.command == "identities":
            report = run_identity_suite(args.seed, args.count)
            write_json(out_dir / "identities.json", report)
            for name, entry in report.items():
                if isinstance(entry, dict):
                    status = "pass" if entry["passed"] else "FAIL"
                    print(f"{name}: {status} (max error {entry['max_error']:.3e})")
            return 0 if report["all_passed"] else 1

        grid = grid_from_args(args)

        if args.command == "norms":
            sym = symbol_from_file(args, args.nwork, grid)
            run_norms(sym, _parse_floats(args.alphas), grid, out_dir)
            print(f"norms: wrote {out_dir / 'norms.json'}")
            return 0

        if args.command == "verify-testfns":
            report = verify_family_claims(a_grid=_parse_floats(args.a_grid),
                                          alpha_grid=_parse_floats(args.alphas),
                                          grid=grid)
            write_json(out_dir / "testfn_claims.json", report)
            mismatches = sum(1 for fam in report.values()
                             for c in fam["claims"] if c["status"] == "mismatch")
            print(f"verify-testfns: wrote {out_dir / 'testfn_claims.json'} "
                  f"({mismatches} mismatching claims reported)")
            return 0

        if args.command == "criterion":
            sym = symbol_from_file(args, args.nwork, grid)
            report = run_criterion(args.op, sym, args.alpha, args.beta, grid,
                                   args.nseq, out_dir)
            print(f"criterion {args.op}: verdict {report.verdict}")
            return 0

        if args.command == "essnorm":
            sym = symbol_from_file(args, args.nwork, grid)
            try:
                est = run_essnorm(args.op, sym, args.alpha, args.beta, grid,
                                  args.nseq, out_dir)
            except OperatorNotBoundedError as exc:
                print(f"essnorm: {exc}", file=sys.stderr)
                return 1
            print(f"essnorm {args.op}: combined {est.combined:.6g} "
                  f"compact={est.compact_flag}")
            return 0

        if args.command == "sweep":
            cfg = load_json_config(args.config) if args.config else {}
            if args.nseq != 4096:
                cfg.setdefault("nseq", args.nseq)
            rows = run_sweep(cfg, out_dir)
            print(f"sweep: {len(rows)} cells -> {out_dir / 'summary.csv'}")
            return 0

        parser.error(f"unknown command {args.command}")
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    return 0


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
