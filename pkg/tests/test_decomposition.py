from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from bispinor import decomposition as dec
from bispinor.errors import NotHermitian, NullMomentum, ZeroMass, ZeroMomentum
from bispinor.sampling import Sampler
from bispinor.spinor_core import SIGMA_3, det2, vector_to_bispinor

from conftest import matrices, seeds

R2 = math.sqrt(2.0)


def test_decompose_rest_frame():
    pair = dec.decompose_momentum([1, 0, 0, 0])
    np.testing.assert_allclose(pair.matrix, np.eye(2), atol=1e-15)
    assert pair.regime is dec.Regime.REAL and pair.sign == 1
    assert dec.complex_mass(pair) == pytest.approx(1)


def test_decompose_spacelike_oracle():
    pair = dec.decompose_momentum([0, 1, 0, 0])
    np.testing.assert_allclose(pair.matrix, np.array([[1, 1], [1, -1]]) / R2, atol=1e-15)
    assert pair.regime is dec.Regime.IMAGINARY
    assert abs(dec.complex_mass(pair)) == pytest.approx(1)


def test_decompose_null_oracle():
    pair = dec.decompose_momentum([1, 0, 0, 1])
    np.testing.assert_allclose(pair.matrix, [[R2, 0], [0, 0]], atol=1e-15)
    assert pair.sign == 1


def test_decompose_negative_energy():
    pair = dec.decompose_momentum([-2, 0, 0, 0])
    assert pair.sign == -1
    np.testing.assert_allclose(pair.matrix, R2 * np.eye(2), atol=1e-15)


def test_decompose_errors():
    with pytest.raises(ZeroMomentum):
        dec.decompose_momentum([0, 0, 0, 0])
    with pytest.raises(NotHermitian):
        dec.decompose_momentum(np.array([[1, 1j], [1j, 1]]))


def test_mass_regime_labels():
    assert dec.mass_regime(vector_to_bispinor([2, 1, 0, 0])) == "timelike"
    assert dec.mass_regime(vector_to_bispinor([1, 2, 0, 0])) == "spacelike"
    assert dec.mass_regime(vector_to_bispinor([1, 0, 1, 0])) == "null"


def test_momentum_from_pair_sign_rules():
    a = np.array([[1, 0.5j], [0.25, 2]])
    p_real = dec.momentum_from_pair(dec.SpinorPairMatrix(a))
    p_imag = dec.momentum_from_pair(dec.SpinorPairMatrix(a, 1, dec.Regime.IMAGINARY))
    assert det2(p_real).real > 0
    assert det2(p_imag).real < 0
    # |det A|^2 = m^2 in both regimes
    assert abs(det2(p_real)) == pytest.approx(abs(det2(a)) ** 2)
    assert abs(det2(p_imag)) == pytest.approx(abs(det2(a)) ** 2)


def test_normalize_sl2c_branches():
    a = np.array([[2, 0], [0, 2j]])
    mu, ap = dec.normalize_sl2c(a)
    assert mu == 4j
    assert det2(ap) == pytest.approx(1)
    _, am = dec.normalize_sl2c(a, branch=-1)
    np.testing.assert_allclose(am, -ap)
    with pytest.raises(ZeroMass):
        dec.normalize_sl2c(np.array([[1, 2], [2, 4]]))


def test_gauge_fix_identity_oracle():
    u, rep = dec.gauge_fix_real(np.eye(2))
    np.testing.assert_allclose(u, [[0, -1], [1, 0]], atol=1e-15)
    assert rep.c == 0 and rep.lam == 1


def test_coset_momentum_relations():
    # p0 + p3 = m(|c|^2/l^2 + l^2), p0 - p3 = m/l^2, p1 - i p2 = m c / l^2
    rep = dec.CosetRepReal(0.5 - 0.25j, 2.0)
    p = dec.coset_to_momentum(rep, 3.0)
    assert p[0] + p[3] == pytest.approx(3 * (0.3125 / 4 + 4))
    assert p[0] - p[3] == pytest.approx(0.75)
    assert complex(p[1], -p[2]) == pytest.approx(3 * (0.5 - 0.25j) / 4)
    # F^dag F transposed reproduces the same momentum at m = 1
    f = rep.matrix()
    pf = dec.momentum_from_pair(dec.SpinorPairMatrix(f))
    np.testing.assert_allclose(pf, vector_to_bispinor(dec.coset_to_momentum(rep, 1.0)), atol=1e-14)


def test_imag_coset_momentum():
    z, t, f = 0.4, 1.1, 2.5
    m = dec.imag_coset_matrix(z, t, f)
    p = dec.momentum_from_pair(dec.SpinorPairMatrix(m, 1, dec.Regime.IMAGINARY))
    want = vector_to_bispinor(
        [math.sinh(z), math.cosh(z) * math.sin(t) * math.cos(f), math.cosh(z) * math.sin(t) * math.sin(f), math.cosh(z) * math.cos(t)]
    )
    np.testing.assert_allclose(p, want, atol=1e-14)
    assert det2(m) == pytest.approx(1)


def test_hyperbolic_examples():
    h = dec.HyperbolicCoords(2.0, 0.0, 0.0, 0.0)
    np.testing.assert_allclose(dec.hyperbolic_to_momentum(h), [2, 0, 0, 0])
    h = dec.HyperbolicCoords(1.0, 0.0, math.pi / 2, 0.0, regime=dec.Regime.IMAGINARY)
    np.testing.assert_allclose(dec.hyperbolic_to_momentum(h), [0, 1, 0, 0], atol=1e-15)
    with pytest.raises(NullMomentum):
        dec.momentum_to_hyperbolic([1, 0, 0, 1])


def test_coset_from_hyperbolic_large_rapidity_is_finite():
    rep = dec.coset_from_hyperbolic(dec.HyperbolicCoords(1.0, 30.0, 1e-3, 0.3))
    assert np.isfinite(rep.c) and np.isfinite(rep.lam)


def test_rescale_lambda_is_not_gauge():
    rep = dec.CosetRepReal(0.3 + 0.1j, 1.2)
    new = dec.rescale_coset_lambda(rep, 1.5)
    assert det2(new.matrix()) == pytest.approx(1)
    assert not np.allclose(dec.coset_to_momentum(new, 1.0), dec.coset_to_momentum(rep, 1.0))


def test_boost_coset_keeps_mass():
    rep = dec.CosetRepReal(0.3 + 0.1j, 1.2)
    p = dec.coset_to_momentum(dec.boost_coset(rep, 1.7), 2.0)
    assert p[0] ** 2 - p[1:] @ p[1:] == pytest.approx(4.0)


def test_pair_matrix_is_read_only():
    pair = dec.SpinorPairMatrix(np.eye(2))
    with pytest.raises(ValueError):
        pair.matrix[0, 0] = 5


@pytest.mark.parametrize("kind", ["timelike+", "timelike-", "spacelike", "null"])
@given(seed=seeds)
def test_roundtrip_property(kind, seed):
    p = Sampler(seed).momentum_bispinor(kind)
    pair = dec.decompose_momentum(p)
    np.testing.assert_allclose(dec.momentum_from_pair(pair), p, atol=1e-10)


@given(seed=seeds)
def test_u2_gauge_invariance(seed):
    rng = Sampler(seed)
    pair = rng.pair(dec.Regime.REAL, rng.sign())
    moved = dec.SpinorPairMatrix(rng.u2() @ pair.matrix, pair.sign)
    np.testing.assert_allclose(dec.momentum_from_pair(moved), dec.momentum_from_pair(pair), atol=1e-12)


@given(seed=seeds)
def test_u11_gauge_invariance(seed):
    rng = Sampler(seed)
    pair = rng.pair(dec.Regime.IMAGINARY)
    v = rng.u11()
    np.testing.assert_allclose(v.conj().T @ SIGMA_3 @ v, SIGMA_3, atol=1e-12)
    moved = dec.SpinorPairMatrix(v @ pair.matrix, 1, dec.Regime.IMAGINARY)
    p = dec.momentum_from_pair(pair)
    np.testing.assert_allclose(dec.momentum_from_pair(moved), p, atol=1e-11 * max(1, np.abs(p).max()))


@given(matrices())
def test_gauge_fix_real_recovers(a):
    mu, ap = dec.normalize_sl2c(a)
    u, rep = dec.gauge_fix_real(ap)
    np.testing.assert_allclose(u @ u.conj().T, np.eye(2), atol=1e-9)
    assert det2(u) == pytest.approx(1, abs=1e-9)
    assert rep.lam > 0
    np.testing.assert_allclose(u @ rep.matrix(), ap, atol=1e-9 * np.abs(ap).max())


@given(matrices())
def test_gauge_fix_imag_recovers(a):
    _, ap = dec.normalize_sl2c(a)
    v, rep = dec.gauge_fix_imag(ap)
    np.testing.assert_allclose(v.conj().T @ SIGMA_3 @ v, SIGMA_3, atol=1e-7 * np.abs(ap).max() ** 2)
    np.testing.assert_allclose(v @ rep.matrix(), ap, atol=1e-7 * np.abs(ap).max())


@given(
    st.floats(0.1, 5.0),
    st.floats(0.0, 4.0),
    st.floats(0.05, math.pi - 0.05),
    st.floats(0.0, 2 * math.pi - 1e-9),
)
def test_coset_and_hyperbolic_paths_agree(m, zeta, theta, phi):
    h = dec.HyperbolicCoords(m, zeta, theta, phi)
    direct = dec.hyperbolic_to_momentum(h)
    via = dec.coset_to_momentum(dec.coset_from_hyperbolic(h), m)
    np.testing.assert_allclose(via, direct, atol=1e-11 * max(1, np.abs(direct).max()))


@given(
    st.floats(0.1, 5.0),
    st.floats(-3.0, 3.0),
    st.floats(0.05, math.pi - 0.05),
    st.floats(0.0, 2 * math.pi - 1e-6),
    st.sampled_from([1, -1]),
)
def test_hyperbolic_roundtrip(m, zeta, theta, phi, sign):
    real = dec.HyperbolicCoords(m, abs(zeta) + 0.05, theta, phi, sign)
    imag = dec.HyperbolicCoords(m, zeta, theta, phi, 1, dec.Regime.IMAGINARY)
    for h in (real, imag):
        back = dec.momentum_to_hyperbolic(dec.hyperbolic_to_momentum(h))
        assert back.regime is h.regime and back.energy_sign == h.energy_sign
        assert (back.mass_scale, back.zeta, back.theta) == pytest.approx((h.mass_scale, h.zeta, h.theta), abs=1e-9)
        assert math.cos(back.phi - h.phi) == pytest.approx(1.0, abs=1e-12)


@given(matrices())
def test_row_swap_invariance(a):
    p = dec.momentum_from_pair(dec.SpinorPairMatrix(a))
    q = dec.momentum_from_pair(dec.SpinorPairMatrix(a[::-1]))
    np.testing.assert_allclose(q, p, atol=1e-12 * max(1, np.abs(p).max()))
