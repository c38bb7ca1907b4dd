import math

import numpy as np
import pytest

import diskvolterra as dv
from diskvolterra import SelfMapSymbol, TruncatedSeries, Weight
from diskvolterra.essnorm import essnorm_conditions


def sym_of(phi_coeffs, g_coeffs, grid):
    return SelfMapSymbol(TruncatedSeries(phi_coeffs), TruncatedSeries(g_coeffs),
                         grid=grid)


def test_essnorm_condition_table():
    zero, specs = essnorm_conditions("cphiug", 0.5)
    assert zero and all(d for _, _, d in specs)
    zero, specs = essnorm_conditions("ugcphi", 0.5)
    assert zero
    zero, specs = essnorm_conditions("vgcphi", 0.5)
    assert not zero and specs == [("u1", ("power", 0.5), False)]
    _, specs = essnorm_conditions("vgcphi", 2.0)
    assert specs == [("u1", ("power", 2.0), False), ("u2", ("power", 1.0), False)]
    _, specs = essnorm_conditions("cphiug", 2.0)
    assert specs == [("u1", ("power", 1.0), False), ("u2", ("log",), False)]
    _, specs = essnorm_conditions("ugcphi", 3.0)
    assert specs == [("u1", ("power", 2.0), False), ("u2", ("power", 1.0), False)]


def test_sequence_limsup_monomials(grid):
    sym = sym_of([0, 1], [0, 1], grid)
    for alpha in (0.5, 1.0, 2.0):
        est, trend, extrap, _ = dv.sequence_limsup(
            lambda z: np.ones_like(z), sym, Weight.standard(alpha),
            ("power", alpha), 10_000, grid=grid)
        assert est == pytest.approx((2 * alpha / math.e) ** alpha, rel=0.02)
        assert extrap is None


def test_sequence_limsup_compact_decay(grid):
    sym = sym_of([0, 0.5], [0, 1], grid)
    est, trend, _, _ = dv.sequence_limsup(lambda z: np.ones_like(z), sym,
                                          Weight.standard(1.0), ("power", 3.0),
                                          4096, grid=grid)
    assert est == 0.0  # (1/2)^3072 underflows


def test_sequence_limsup_zero(grid):
    sym = sym_of([0, 0.5], [0, 1], grid)
    est, _, _, _ = dv.sequence_limsup(lambda z: np.zeros_like(z), sym,
                                      Weight.standard(1.0), ("power", 1.0),
                                      256, grid=grid)
    assert est == 0.0


def test_sequence_limsup_window_validation(grid):
    sym = sym_of([0, 0.5], [0, 1], grid)
    with pytest.raises(ValueError):
        dv.sequence_limsup(lambda z: np.ones_like(z), sym, Weight.standard(1.0),
                           ("power", 1.0), 64, window=64, grid=grid)


def test_sequence_limsup_log_extrapolation(grid):
    sym = sym_of([0, 1], [0, 1], grid)
    est, trend, extrap, _ = dv.sequence_limsup(
        lambda z: np.ones_like(z), sym, Weight.logarithmic(), ("log",),
        8192, grid=grid)
    # log n * ||z^n||_{v_log} -> 1 slowly from below; the fit looks ahead
    assert 0.5 < est < 1.0
    assert extrap is not None and est < extrap < 1.2


def test_boundary_limsup_empty_for_small_phi(grid):
    sym = sym_of([0, 0.5], [0, 1], grid)
    u = dv.symbol_weights("vgcphi", sym)["u1"]
    scan = dv.boundary_limsup(u, sym, 1.0, ("power", 1.0), grid)
    assert scan.estimate == 0.0
    assert scan.trend == "empty"
    assert not any(scan.nonempty)


def test_boundary_limsup_weight_cancellation(grid):
    sym = sym_of([0, 1], [0, 1], grid)
    scan = dv.boundary_limsup(lambda z: np.ones_like(z), sym, 1.0,
                              ("power", 1.0), grid)
    assert scan.estimate == pytest.approx(1.0, abs=1e-3)


def test_boundary_limsup_zero_u(grid):
    sym = sym_of([0, 1], [0, 1], grid)
    scan = dv.boundary_limsup(lambda z: np.zeros_like(z), sym, 1.0,
                              ("power", 1.0), grid)
    assert scan.estimate == 0.0


def test_essential_norm_refuses_unbounded(grid):
    sym = sym_of([0, 1], [0, 1], grid)
    with pytest.raises(dv.OperatorNotBoundedError):
        dv.essential_norm("vgcphi", sym, 2.0, 1.0, grid, n_seq=1024)


def test_essential_norm_zero_cases(grid):
    sym = sym_of([0, 0.5], [0, 1, 0.25], grid)
    for kind in ("cphiug", "ugcphi"):
        est = dv.essential_norm(kind, sym, 0.5, 1.0, grid, n_seq=1024)
        assert est.theorem_zero
        assert est.combined == 0.0
        assert est.compact_flag
        assert all(c.diagnostic_only for c in est.conditions)
        assert all(c.sequence_estimate <= 1e-3 for c in est.conditions)


def test_essential_norm_compact_for_small_phi(grid):
    # ||phi||_inf <= 0.9 forces geometric decay of every condition
    sym = sym_of([0, 0.9], [0, 1], grid)
    for kind in dv.KINDS:
        for alpha in (0.5, 1.5):
            est = dv.essential_norm(kind, sym, alpha, alpha, grid, n_seq=4096)
            assert est.combined <= 1e-3, (kind, alpha)
            assert est.compact_flag


def test_essential_norm_non_compact_witness(grid):
    sym = sym_of([0, 1], [0, 1], grid)
    est = dv.essential_norm("vgcphi", sym, 1.0, 1.0, grid, n_seq=4096)
    assert est.combined == pytest.approx(2.0 / math.e, rel=0.05)
    assert not est.compact_flag


def test_two_route_agreement(grid):
    cases = [
        sym_of([0, 1], [0, 1], grid),
        dv.symbol_from_config({"phi": {"family": "mobius", "params": {"a": 0.5}},
                               "g": {"family": "identity"}}, grid=grid),
    ]
    for sym in cases:
        est = dv.essential_norm("vgcphi", sym, 1.0, 1.0, grid, n_seq=4096)
        for c in est.conditions:
            seq, bnd = c.sequence_estimate, c.boundary.estimate
            if seq > 1e-6 and bnd > 1e-6:
                ratio = seq / bnd
                assert 1.0 / 50.0 <= ratio <= 50.0


def test_essential_norm_below_operator_norm_proxy(grid):
    sym = sym_of([0, 1], [0, 1], grid)
    est = dv.essential_norm("vgcphi", sym, 1.0, 1.0, grid, n_seq=2048)
    opnorm = dv.operator_norm_estimate("vgcphi", sym, 1.0, 1.0, grid,
                                       sample_count=200, seed=13)
    assert est.combined <= 100.0 * opnorm


def test_essential_norm_scaling_in_g(grid):
    c = 3.5
    sym1 = sym_of([0, 0.4, 0.3], [0, 1, 1], grid)
    sym2 = sym_of([0, 0.4, 0.3], [0, c, c], grid)
    for kind, alpha in (("vgcphi", 1.0), ("cphiug", 2.0)):
        e1 = dv.essential_norm(kind, sym1, alpha, 1.0, grid, n_seq=1024)
        e2 = dv.essential_norm(kind, sym2, alpha, 1.0, grid, n_seq=1024)
        assert e1.compact_flag == e2.compact_flag
        for c1, c2 in zip(e1.conditions, e2.conditions):
            if c1.sequence_estimate > 0:
                assert c2.sequence_estimate == pytest.approx(
                    c * c1.sequence_estimate, rel=1e-9)
            if c1.boundary.estimate > 0:
                assert c2.boundary.estimate == pytest.approx(
                    c * c1.boundary.estimate, rel=1e-9)
