from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given

from bispinor.errors import ChiralityMismatch
from bispinor.spinor_core import (
    EPS_LOWER,
    EPS_UPPER,
    SIGMA,
    Spinor,
    bispinor_to_vector,
    contract,
    det2,
    hermiticity_residual,
    is_hermitian,
    mass_squared,
    mass_squared_sigma_bar,
    minkowski_square,
    outer,
    real_vector,
    vector_to_bispinor,
    vector_to_bispinor_bar,
)

from conftest import complex_vectors, four_vectors


def test_epsilon_tensors_are_mutual_inverses():
    np.testing.assert_array_equal(EPS_UPPER @ EPS_LOWER, np.eye(2))


def test_contract_convention():
    # pi_1 omega_2 - pi_2 omega_1
    assert contract([1, 0], [0, 1]) == 1
    assert contract([0, 1], [1, 0]) == -1
    assert contract([2 + 1j, 3], [1, 1j]) == (2 + 1j) * 1j - 3


def test_contract_is_stacked_determinant():
    a, b = np.array([1 + 2j, -0.5j]), np.array([3.0, 1 - 1j])
    assert contract(a, b) == pytest.approx(np.linalg.det(np.array([a, b])), abs=1e-15)


def test_contract_rejects_mixed_chirality():
    with pytest.raises(ChiralityMismatch):
        contract(Spinor(1, 0), Spinor(0, 1, dotted=True))


def test_contract_rejects_upper_index():
    with pytest.raises(ChiralityMismatch):
        contract(Spinor(1, 0).raised(), Spinor(0, 1))


def test_raise_lower_roundtrip():
    s = Spinor(1 + 1j, 2 - 3j)
    up = s.raised()
    assert up.upper
    np.testing.assert_array_equal(up.array, [2 - 3j, -1 - 1j])
    np.testing.assert_array_equal(up.lowered().array, s.array)


def test_vector_to_bispinor_oracle():
    # frozen from the sigma map p0 + p.sigma
    np.testing.assert_array_equal(vector_to_bispinor([0, 1, 1, 0]), [[0, 1 - 1j], [1 + 1j, 0]])
    np.testing.assert_array_equal(vector_to_bispinor([2, 0, 0, 1]), [[3, 0], [0, 1]])


def test_sigma_matrices_trace_orthogonal():
    g = np.array([[np.trace(a @ b) for b in SIGMA] for a in SIGMA])
    np.testing.assert_array_equal(g, 2 * np.eye(4))


def test_mass_squared_example():
    p = vector_to_bispinor([2.0, 0.5, -1.0, 0.25])
    assert mass_squared(p) == pytest.approx(4 - 0.25 - 1 - 0.0625, abs=1e-15)
    assert mass_squared_sigma_bar(p) == pytest.approx(2.6875, abs=1e-14)


def test_sigma_bar_matrix():
    pbar = vector_to_bispinor_bar([1.0, 0.0, 0.0, 0.0])
    np.testing.assert_array_equal(pbar, -np.eye(2))


def test_hermiticity():
    p = vector_to_bispinor([1, 2, 3, 4])
    assert is_hermitian(p)
    assert hermiticity_residual(p) == 0
    q = vector_to_bispinor([1j, 0, 0, 0])
    assert not is_hermitian(q)
    with pytest.raises(ValueError):
        real_vector(q)


def test_outer_is_pi_pibar():
    pi = np.array([1j, 2])
    np.testing.assert_array_equal(outer(pi), [[1, 2j], [-2j, 4]])


@given(four_vectors())
def test_det_is_minkowski_square(p):
    assert mass_squared(vector_to_bispinor(p)) == pytest.approx(minkowski_square(p), abs=1e-12 * (1 + p @ p))


@given(complex_vectors(4))
def test_bispinor_roundtrip(p):
    np.testing.assert_allclose(bispinor_to_vector(vector_to_bispinor(p)), p, atol=1e-13)


@given(complex_vectors(), complex_vectors(), complex_vectors())
def test_contract_bilinear_antisymmetric(a, b, c):
    assert contract(a, b) == pytest.approx(-contract(b, a), abs=1e-12)
    assert contract(a + 2j * c, b) == pytest.approx(contract(a, b) + 2j * contract(c, b), abs=1e-10)
    assert contract(a, a) == 0


@given(complex_vectors(), complex_vectors())
def test_conjugation_maps_to_dotted(a, b):
    sa, sb = Spinor.from_array(a), Spinor.from_array(b)
    assert sa.conj().dotted
    assert contract(sa.conj(), sb.conj()) == pytest.approx(np.conj(contract(sa, sb)), abs=1e-12)


@given(four_vectors())
def test_sigma_bar_determinant_identity(p):
    m = vector_to_bispinor(p)
    assert mass_squared_sigma_bar(m) == pytest.approx(mass_squared(m), abs=1e-11 * (1 + p @ p))


def test_det2_matches_numpy():
    a = np.array([[1 + 1j, 2], [3j, -4]])
    assert det2(a) == pytest.approx(np.linalg.det(a), abs=1e-14)
