import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import projkin as pk
from projkin.model import HomogeneousPoint


def test_parameters_unit(unit):
    assert unit.t_EU == 1.0 and unit.H0 == 1.0 and unit.K == -1.0


def test_parameters_curvature():
    assert pk.make_parameters(2.0, 1.0).K == -0.25


def test_parameters_si(si):
    # 1.3e26 / 299792458 at 40 digits
    assert si.t_EU == pytest.approx(4.336333237575976644e17, rel=1e-15)
    assert si.t_EU * si.H0 == pytest.approx(1.0, rel=1e-15)
    assert si.K < 0


@pytest.mark.parametrize("R,c", [(0, 1), (-1, 1), (1, 0), (1, -2), (math.inf, 1), (1, math.nan)])
def test_parameters_reject(R, c):
    with pytest.raises(pk.DomainError):
        pk.make_parameters(R, c)


def test_lift_examples(unit):
    assert pk.lift(pk.Event(0.2, 0, 0, 0.4), unit).u == (0.2, 0, 0, 0.4, 1)
    vertex = pk.lift(pk.Event(0, 0, 0, 1.0), unit)
    assert vertex.u == (0, 0, 0, 1, 1)
    assert pk.signature_form(vertex) == 0.0
    assert pk.lift(pk.Event(0, 0, 0, 0), unit).u == (0, 0, 0, 0, 1)


def test_project_examples(unit):
    assert pk.project(HomogeneousPoint.of(0.2, 0, 0, 0.4, 1), unit) == pk.Event(0.2, 0, 0, 0.4)
    assert pk.project(HomogeneousPoint.of(0.4, 0, 0, 0.8, 2), unit) == pk.Event(0.2, 0, 0, 0.4)
    with pytest.raises(pk.ProjectiveInfinity):
        pk.project(HomogeneousPoint.of(1, 0, 0, 1, 0), unit)


def test_homogeneous_rejects_zero():
    with pytest.raises(pk.DomainError):
        HomogeneousPoint.of(0, 0, 0, 0, 0)


def test_canonical_at_infinity():
    u = HomogeneousPoint.of(-3, 0, 0, 4, 0).canonical()
    assert u.u == pytest.approx((0.6, 0, 0, -0.8, 0))


def test_round_trip_bulk(rng, si):
    pts = rng.uniform(-10, 10, size=(10_000, 4))
    for row in pts:
        e = pk.Event(row[0] * si.R, row[1] * si.R, row[2] * si.R, row[3] * si.t_EU)
        back = pk.project(pk.lift(e, si), si)
        np.testing.assert_allclose(back.as_array(), e.as_array(), rtol=1e-14)


@given(st.floats(-10, 10), st.floats(-10, 10), st.floats(-10, 10), st.floats(-10, 10),
       st.sampled_from([1e-6, -1e-6, 1e-3, -2.5, 1.0, 7.0, -1e6, 1e6]))
def test_scale_invariance(x, y, z, t, lam):
    p = pk.make_parameters(3.0, 2.0)
    u = pk.lift(pk.Event(x, y, z, t), p)
    scaled = HomogeneousPoint(tuple(lam * v for v in u.u))
    np.testing.assert_allclose(pk.project(scaled, p).as_array(), pk.project(u, p).as_array(),
                               rtol=1e-14, atol=1e-14)


@given(st.floats(-5, 5), st.floats(-5, 5), st.floats(-5, 5), st.floats(-5, 5))
def test_signature_form_on_lift(x, y, z, t):
    p = pk.make_parameters(2.0, 3.0)
    q = pk.signature_form(pk.lift(pk.Event(x, y, z, t), p))
    expected = (x * x + y * y + z * z - (p.c * t) ** 2 + p.R**2) / p.R**2
    assert q == pytest.approx(expected, rel=1e-12, abs=1e-12)


def test_gauge_prefactors(unit):
    assert pk.MetricGauge.consistent(unit).k_time == 0.5
    assert pk.MetricGauge.literal(unit).k_time == 1.0
    assert pk.MetricGauge.for_mode("paper-literal", unit).mode is pk.GaugeMode.LITERAL
