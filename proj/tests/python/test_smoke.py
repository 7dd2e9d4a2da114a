"""Smoke tests for the python bindings."""

import json
import math

import archimedes_curves as ac


def test_quadratic_basics():
    q = ac.make_quadratic(1.0)
    assert q.f(2.0) == 4.0
    assert ac.curvature_analytic(q, 0.0) == 2.0
    assert abs(ac.kappa_chord(q, 0.0, 0.5) - 2.0) < 1e-10
    assert abs(ac.h_max(q, 0.0) - 64.0) < 1e-6


def test_chord_section_values():
    q = ac.make_quadratic(1.0)
    cs = ac.chord_at_height(q, 0.0, 1.0)
    assert abs(cs.chord_length - 2.0) < 1e-12
    assert abs(cs.section - 4.0 / 3.0) < 1e-11
    assert abs(cs.triangle - 1.0) < 1e-12
    assert abs(cs.foot_distance - 1.0) < 1e-12


def test_condition_c_verdicts():
    assert ac.check_condition_C(ac.make_quadratic(1.0)).verdict == ac.Verdict.satisfied
    assert ac.check_condition_C(ac.make_ellipse(2.0, 1.0)).verdict == ac.Verdict.violated
    assert (
        ac.check_condition_C(ac.make_example10()).verdict == ac.Verdict.hypothesis_violated
    )


def test_extrapolated_curvature():
    circle = ac.make_ellipse(1.0, 1.0)
    est = ac.kappa_extrapolated(circle, 1.5 * math.pi)
    assert est.rel_error < 1e-4
    assert abs(est.extrapolated - 1.0) < 1e-4


def test_conic_classification():
    conic = ac.implicit_conic(1.0, 0.5)
    assert conic.discriminant() == 0.0
    assert conic.classify() == ac.ConicCoefficients.Class.parabola


def test_family_verification():
    report = ac.verify_family_on_curve(1.0, 0.5, n_samples=25)
    assert report.pass_()
    assert report.max_g_mismatch <= 1e-9
    parsed = json.loads(report.to_json())
    assert parsed["conic"]["class"] == "parabola"


def test_classify_parabola():
    assert ac.classify_parabola(ac.make_quadratic(1.0)).verdict == ac.ParabolaVerdict.parabola
    assert (
        ac.classify_parabola(ac.make_ellipse(2.0, 1.0)).verdict
        == ac.ParabolaVerdict.not_parabola
    )


def test_cli_roundtrip():
    code, out, err = ac.run_cli(
        ["check", "--condition", "C", "--curve", "builtin:quadratic:a=1"]
    )
    assert code == 0, err
    report = json.loads(out)
    assert report["report"]["verdict"] == "satisfied"
    assert report["config"]["curve"] == "builtin:quadratic:a=1"

    code2, out2, _ = ac.run_cli(
        ["check", "--condition", "C", "--curve", "builtin:quadratic:a=1"]
    )
    assert out == out2  # byte-identical reports

    code3, _, _ = ac.run_cli(["analyze", "--curve", "builtin:example10"])
    assert code3 == 2


def test_report_json_parses():
    report = ac.check_condition_A(ac.make_quadratic(1.0))
    parsed = json.loads(report.to_json())
    assert abs(parsed["fitted"]["a"] - 4.0 / 3.0) < 1e-8
