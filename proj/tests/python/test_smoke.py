"""Smoke tests for the compiled python module."""

import json
import math

import pytest

import gqc


def test_vacuum_roundtrip():
    cm = gqc.sts_covariance(0.0, 0.0, 0.0)
    assert cm.n == 1.0 and cm.m == 1.0 and cm.c1 == 0.0
    assert cm.is_sts_form()
    assert gqc.is_physical(cm)
    flags, label = gqc.classify(cm)
    assert label == gqc.ClassLabel.PRODUCT
    assert flags.physical and flags.product


def test_pure_state_measures():
    cm = gqc.sts_covariance(0.6, 0.0, 0.0)
    assert math.isclose(gqc.duan(cm), math.exp(-1.2), rel_tol=1e-14)
    assert math.isclose(
        gqc.steering(cm, gqc.Direction.A_GIVEN_B).value,
        1.0 / math.cosh(1.2),
        rel_tol=1e-13,
    )
    assert gqc.ent_ppt(cm) < 0.0
    d = gqc.discord(cm, gqc.Direction.A_GIVEN_B)
    assert math.isclose(d.value, gqc.entropy_f(math.cosh(1.2)), rel_tol=1e-10)
    flags, label = gqc.classify(cm)
    assert label == gqc.ClassLabel.SYMMETRIC_EPR


def test_one_way_labels_mirror():
    ab = gqc.classify(gqc.sts_covariance(0.6, 0.0, 1.0))[1]
    ba = gqc.classify(gqc.sts_covariance(0.6, 1.0, 0.0))[1]
    assert ab == gqc.ClassLabel.ONE_WAY_STEER_AB
    assert ba == gqc.ClassLabel.ONE_WAY_STEER_BA


def test_exceptions_are_mapped():
    with pytest.raises(gqc.DomainError):
        gqc.sts_covariance(-1.0, 0.0, 0.0)
    with pytest.raises(gqc.FormError):
        gqc.ent_ppt(gqc.CovarianceMatrix(1.0, 1.0, 0.5, 0.5))
    with pytest.raises(gqc.ProductStateError):
        gqc.optimal_gain_sym(
            gqc.sts_covariance(0.0, 1.0, 1.0), gqc.Direction.A_GIVEN_B
        )
    assert issubclass(gqc.DomainError, ValueError)


def test_thresholds_and_bisection():
    ts = gqc.closed_form_thresholds(1.0, 1.0)
    assert math.isclose(ts.r_ent, 0.5 * math.log(3.0), rel_tol=1e-14)
    found = gqc.bisection_threshold(1.0, 1.0, gqc.ThresholdCriterion.ENT_PPT)
    assert found is not None and abs(found - ts.r_ent) < 1e-8
    assert (
        gqc.bisection_threshold(1.0, 1.0, gqc.ThresholdCriterion.ENT_PPT, 0.3)
        is None
    )


def test_scan_and_serialization():
    spec = gqc.ScanSpec()
    spec.mode = gqc.ScanMode.STS_NOISE_GRID
    spec.fixed = 0.6
    spec.axis1 = gqc.AxisSpec(0.0, 2.0, 9)
    spec.axis2 = gqc.AxisSpec(0.0, 2.0, 9)
    spec.quantities = [gqc.Quantity.ENT_PPT, gqc.Quantity.E_AB]
    result = gqc.run_scan(spec)
    assert len(result.labels) == 81
    ent = result.field(gqc.Quantity.ENT_PPT)
    assert len(ent) == 81
    # mirror symmetry across the diagonal is exact
    for i in range(9):
        for j in range(9):
            assert ent[i * 9 + j] == ent[j * 9 + i]
    csv = gqc.scan_csv(result)
    assert csv.splitlines()[0] == "axis1,axis2,ENT_PPT,E_AB,label"
    payload = json.loads(gqc.scan_json(result))
    assert payload["spec"]["mode"] == "STS_NOISE_GRID"
    assert len(payload["fields"]["E_AB"]) == 81
    points = gqc.extract_boundary(result, gqc.Quantity.ENT_PPT, 0.0)
    assert points and all(0.0 <= p.axis1 <= 2.0 for p in points)


def test_teleport_report():
    rep = gqc.teleport_report(gqc.sts_covariance(0.6, 0.0, 1.0))
    assert rep.direction == gqc.TeleportDirection.A_TO_B
    assert rep.qt_sym and not rep.secure
    assert rep.f_g is None
    sym = gqc.teleport_report(gqc.sts_covariance(0.6, 0.0, 0.0))
    assert sym.direction == gqc.TeleportDirection.SYMMETRIC
    assert sym.secure and gqc.secure_teleport_check(gqc.sts_covariance(0.6, 0.0, 0.0))
