"""Smoke tests for the python bindings."""

import math

import numpy as np
import pytest

import nselab

TWO_PI = 2.0 * math.pi


def test_trig_velocity_at_origin():
    fam = nselab.canonical_trig_triple(0.01)
    u = fam.velocity((0.0, 0.0, 0.0), 0.0)
    assert u == pytest.approx((TWO_PI, TWO_PI, TWO_PI), abs=1e-12)


def test_profile_eval():
    p = nselab.TimeProfile.rational_blowup(1.0, 1.0)
    g, dg, d2g = p.eval(0.5)
    assert g == pytest.approx(0.25)
    assert dg == pytest.approx(1.5)
    assert p.blowup_time == 1.0
    with pytest.raises(Exception):
        p.eval(1.0)


def test_residuals_are_tiny():
    fam = nselab.canonical_two_wave(0.01)
    r = nselab.nse_residual(fam, 32, 0.1)
    assert r["linf_momentum"] < 1e-7
    assert r["linf_divergence"] < 1e-9


def test_initial_field_and_leray():
    fam = nselab.canonical_trig_triple(0.01)
    u0 = fam.initial_field(32)
    assert u0.shape == (3, 32, 32, 32)
    sol, grad, _pot = nselab.leray_split(u0)
    assert np.abs(grad).max() < 1e-10
    assert np.abs(sol - u0).max() < 1e-10


def test_validation_catches_bad_parameters():
    ok, _items = nselab.canonical_two_wave(0.01).validate()
    assert ok
    bad = nselab.plane_wave((1.0, 1.0, 1.0), (1.0, 1.0, 1.0))
    ok, items = bad.validate()
    assert not ok
    assert any(not item["pass"] for item in items)


def test_nonuniqueness_shared_initial_field():
    zero = nselab.canonical_trig_triple(0.01)
    quad = nselab.canonical_trig_triple(0.01, nselab.TimeProfile.quadratic(1.0))
    assert np.array_equal(zero.initial_field(16), quad.initial_field(16))
    d = np.abs(zero.sample_velocity(16, 0.5) - quad.sample_velocity(16, 0.5)).max()
    assert d >= 0.1


def test_taylor_first_coefficient():
    fam = nselab.canonical_trig_triple(0.01)
    u0 = fam.initial_field(16)
    series = nselab.taylor_coefficients(u0, 0.01, 2)
    beta = TWO_PI**2 * 0.01
    psi1 = series.coefficient(1)
    assert np.abs(psi1 + beta * u0).max() < 1e-9


def test_dns_decay():
    fam = nselab.canonical_trig_triple(0.01)
    cfg = nselab.DnsConfig()
    cfg.n = 16
    cfg.nu = 0.01
    cfg.dt = 1e-3
    out = nselab.dns_run(fam.initial_field(16), cfg, 0.02, [0.0, 0.02])
    assert not out["blowup_flagged"]
    energies = [row["energy"] for row in out["diagnostics"]]
    assert energies[1] < energies[0]
    err = np.abs(out["snapshots"][1] - fam.sample_velocity(16, 0.02)).max()
    assert err < 1e-6


def test_blowup_monitor():
    fam = nselab.canonical_trig_triple(
        0.01, nselab.TimeProfile.rational_blowup(1.0, 0.5)
    )
    rep = nselab.blowup_monitor(fam, 32, [0.4, 0.49], 1000.0)
    assert rep["first_exceedance"] == pytest.approx(0.49)
    assert rep["samples"][1]["sup_velocity"] >= 1000.0


def test_nsef_roundtrip(tmp_path):
    fam = nselab.canonical_plane_wave(0.01)
    u = fam.initial_field(16)
    path = str(tmp_path / "field.nsef")
    nselab.write_nsef(path, u)
    assert np.array_equal(nselab.read_nsef(path), u)


def test_run_experiment_wrapper():
    report = nselab.run_experiment("verify", grid=16, times=[0.0, 0.1])
    assert report["passed"] is True
    assert len(report["rows"]) == 2
    with pytest.raises(nselab.ConfigError):
        nselab.run_experiment("verify", family="plane-wave", b=[1, 1, 1])
