from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from bispinor import geometry as geo
from bispinor.decomposition import CosetRepReal

angles = st.floats(0.2, math.pi - 0.2)
azimuths = st.floats(0.0, 2 * math.pi)
tangents = st.lists(st.floats(-2.0, 2.0), min_size=4, max_size=4).map(np.array)


def test_flat_metric_signature():
    assert geo.flat_metric([1, 0, 0, 0]) == -1
    assert geo.flat_metric([0, 1, 1, 1]) == 3


def test_coordinate_metric_real_oracle():
    # at zeta = 0 only the mass and rapidity directions survive
    assert geo.coordinate_metric_real((2.0, 0.0, 1.0, 0.0), (1.0, 1.0, 5.0, 5.0)) == -1 + 4
    g = geo.coordinate_metric_real((1.0, 1.0, math.pi / 2, 0.0), (0.0, 0.0, 0.0, 1.0))
    assert g == pytest.approx(math.sinh(1.0) ** 2)


def test_coordinate_metric_imag_oracle():
    g = geo.coordinate_metric_imag((1.0, 0.0, math.pi / 2, 0.0), (1.0, 1.0, 1.0, 1.0))
    assert g == pytest.approx(1 - 1 + 1 + 1)


def test_s4_chart_lands_on_unit_sphere():
    y = geo.s4_chart((0.7, 1.0, 2.0, 3.0))
    assert y @ y == pytest.approx(1.0, abs=1e-15)


def test_fd_pullback_example():
    x, v = (1.3, 0.8, 1.1, 0.4), (0.2, -0.5, 0.3, 0.7)
    fd, scale = geo.pullback_fd(geo.real_chart, x, v)
    closed = geo.coordinate_metric_real(x, v)
    assert geo.relative_error(fd, closed, scale) < 1e-9


def test_richardson_ratio_near_four():
    assert geo.richardson_ratio(geo.real_chart, (1.3, 0.8, 1.1, 0.4)) == pytest.approx(4.0, abs=0.05)


def test_maurer_cartan_oracle():
    rep = CosetRepReal(1 + 1j, 2.0)
    got = geo.maurer_cartan_metric(rep, 1j, 0.5)
    assert geo.coset_metric_closed(rep, 1j, 0.5) == 0.3125
    assert got == pytest.approx(0.3125, rel=1e-10)


def test_maurer_cartan_form_is_traceless():
    x = geo.maurer_cartan_form(CosetRepReal(0.3 - 0.2j, 0.7), 0.5 + 0.1j, -0.3)
    assert abs(np.trace(x)) < 1e-9


@given(st.floats(0.2, 3.0), st.floats(0.1, 2.0), angles, azimuths, tangents)
def test_real_metric_matches_pullback(m, zeta, theta, phi, v):
    x = (m, zeta, theta, phi)
    fd, scale = geo.pullback_fd(geo.real_chart, x, v)
    assert geo.relative_error(fd, geo.coordinate_metric_real(x, v), scale) <= 1e-6


@given(st.floats(0.2, 3.0), st.floats(-2.0, 2.0), angles, azimuths, tangents)
def test_imag_metric_matches_pullback(k, zeta, theta, phi, v):
    x = (k, zeta, theta, phi)
    fd, scale = geo.pullback_fd(geo.imag_chart, x, v)
    assert geo.relative_error(fd, geo.coordinate_metric_imag(x, v), scale) <= 1e-6


@given(st.floats(0.1, 2.0), angles, azimuths, azimuths, tangents)
def test_s4_metric_matches_pullback(zeta, theta, phi, psi, v):
    x = (zeta, theta, phi, psi)
    fd, scale = geo.pullback_fd(geo.s4_chart, x, v, geo.euclidean_metric)
    assert geo.relative_error(fd, geo.s4_conformal_metric(x, v), scale) <= 1e-6


@given(
    st.complex_numbers(max_magnitude=3.0, allow_nan=False, allow_infinity=False),
    st.floats(0.3, 3.0),
    st.complex_numbers(max_magnitude=2.0, allow_nan=False, allow_infinity=False),
    st.floats(-2.0, 2.0),
)
def test_maurer_cartan_matches_closed_form(c, lam, dc, dlam):
    closed = geo.coset_metric_closed(CosetRepReal(c, lam), dc, dlam)
    if closed < 1e-6:
        return
    got = geo.maurer_cartan_metric(CosetRepReal(c, lam), dc, dlam)
    assert abs(got - closed) / closed <= 1e-8


@given(st.floats(0.1, 2.0), angles, azimuths, st.lists(st.floats(-1, 1), min_size=3, max_size=3).map(np.array))
def test_coset_metric_matches_coordinate_bracket(zeta, theta, phi, v):
    x = np.array([zeta, theta, phi])
    bracket = geo.coordinate_metric_real((1.0, *x), (0.0, *v))
    if bracket < 1e-6:
        return
    d = geo.jacobian_fd(geo.coset_chart, x) @ v
    from bispinor.decomposition import HyperbolicCoords, coset_from_hyperbolic

    rep = coset_from_hyperbolic(HyperbolicCoords(1.0, *x))
    mc = geo.maurer_cartan_metric(rep, complex(d[0], d[1]), d[2])
    assert abs(mc - bracket) / bracket <= 1e-6


@given(st.floats(0.2, 3.0), st.floats(0.1, 2.0), angles, azimuths, tangents, st.floats(-3, 3))
def test_metric_is_quadratic(m, zeta, theta, phi, v, a):
    x = (m, zeta, theta, phi)
    g = geo.coordinate_metric_real(x, v)
    assert geo.coordinate_metric_real(x, a * v) == pytest.approx(a * a * g, abs=1e-10 * (1 + abs(g)) * (1 + a * a))


def test_sample_record():
    s = geo.sample(geo.s4_conformal_metric, (0.5, 1.0, 0.0, 0.0), (0.0, 0.0, 0.0, 1.0))
    assert s.squared_length == pytest.approx(1 / math.cosh(0.5) ** 2)
