import cmath
import math

import pytest

import wlp


def test_version():
    assert wlp.__version__ == "0.1.0"


def test_weights():
    assert wlp.Weight.polynomial(2)(3) == 9.0
    assert wlp.Weight.exppoly(2)(3) == 80.0
    rep = wlp.check_submultiplicative(wlp.Weight.polynomial(1), 10)
    assert rep["max_ratio"] == pytest.approx(2.0)
    w = wlp.Weight.from_json('{"family": "subexp", "params": {"gamma": 0.5}}')
    assert w.family == "subexp"
    with pytest.raises(wlp.ParameterError):
        wlp.Weight.subexp(1.5)


def test_sequences():
    f = wlp.TruncSeq(-1, [1, 2j, 3])
    g = wlp.TruncSeq(0, [1, -1])
    assert wlp.convolve(f, g) == wlp.convolve_direct(f, g)
    assert wlp.convolve(wlp.delta(2), wlp.delta(-5)) == wlp.delta(-3)
    assert wlp.norm_p_w(wlp.delta(3), 2.0, wlp.Weight.polynomial(2)) == pytest.approx(9.0)
    assert wlp.translate(f, 2).lo == 1


def test_circle_maps():
    b = wlp.CircleMap.blaschke(0.5)
    c = wlp.coeffs(b, 1e-14)
    assert [c[k] for k in range(4)] == [-0.5, 0.75, 0.375, 0.1875]
    z = cmath.exp(0.7j)
    assert abs(b.inverse()(b(z)) - z) < 1e-14
    with pytest.raises(wlp.DomainError):
        b(0.5)


def test_composition_operators():
    assert wlp.k_bound(0.0, wlp.Weight.polynomial(2)) == 1.0
    assert wlp.k_bound(0.1, wlp.Weight.polynomial(2)) == pytest.approx(1.3453, abs=1e-3)
    rows = wlp.blowup_experiment(1, 0.5, 1.0, [9, 16, 25])
    assert [r["ratio"] for r in rows] == sorted(r["ratio"] for r in rows)
    with pytest.raises(wlp.AdmissibilityError):
        wlp.blowup_experiment(2, 0.6, 1.0, [5], a=2.0)
    reps = wlp.distortion_experiment(2.0, [0.02, 0.1], 32)
    assert reps[0]["distortion"] < reps[1]["distortion"]
    f = wlp.TruncSeq(-3, [1, 0.5, 0.25j, 2, -1, 0.1, 1])
    assert wlp.chain_rule_check(f, wlp.CircleMap.blaschke(0.3))["residual_l1"] < 1e-6


def test_groups():
    census = wlp.enumerate_automorphisms_l2(5)
    assert census["total"] == 120 and census["standard_count"] == 20
    assert wlp.kalton_wood_scan(3)["min_nonstandard_norm"] is None
    assert math.isclose(wlp.kalton_wood_scan(6)["min_nonstandard_norm"], 1.3660254037844408)
    assert all(wlp.shift_homomorphism_check(g) for g in ["Z_2", "Z_5", "S3"])


def test_verify_suite():
    results = wlp.run_verify("groupalg", seed=7)
    assert results and all(r["passed"] for r in results)
