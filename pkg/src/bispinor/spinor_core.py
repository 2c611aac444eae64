"""Two-component spinors, the sigma-matrix map and bispinor primitives.

Conventions: ``EPS_UPPER`` raises an index, ``EPS_LOWER`` lowers it, so that
``pi_a omega^a = pi_1 omega_2 - pi_2 omega_1``.  A 4-vector ``p`` maps to the
bispinor ``p_{a b'} = p_mu sigma^mu`` with ``sigma^mu = (1, sigma_x, sigma_y,
sigma_z)``; rows carry the undotted index, columns the dotted one.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ChiralityMismatch

DEFAULT_TOL = 1e-10

EPS_UPPER = np.array([[0, 1], [-1, 0]], dtype=complex)
EPS_LOWER = np.array([[0, -1], [1, 0]], dtype=complex)

PAULI = np.array(
    [
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=complex,
)
SIGMA = np.concatenate([np.eye(2, dtype=complex)[None], PAULI])
SIGMA_BAR = np.concatenate([-np.eye(2, dtype=complex)[None], PAULI])
SIGMA_3 = PAULI[2]


@dataclass(frozen=True)
class Spinor:
    """A two-component spinor with its index type carried as metadata."""

    c1: complex
    c2: complex
    dotted: bool = False
    upper: bool = False

    @classmethod
    def from_array(cls, arr, dotted: bool = False, upper: bool = False) -> "Spinor":
        a = np.asarray(arr, dtype=complex)
        if a.shape != (2,):
            raise ValueError(f"spinor needs 2 components, got shape {a.shape}")
        return cls(complex(a[0]), complex(a[1]), dotted, upper)

    @property
    def array(self) -> np.ndarray:
        return np.array([self.c1, self.c2], dtype=complex)

    def conj(self) -> "Spinor":
        """Complex conjugate; flips chirality and keeps index position."""
        return Spinor(self.c1.conjugate(), self.c2.conjugate(), not self.dotted, self.upper)

    def raised(self) -> "Spinor":
        if self.upper:
            return self
        return Spinor.from_array(EPS_UPPER @ self.array, self.dotted, upper=True)

    def lowered(self) -> "Spinor":
        if not self.upper:
            return self
        return Spinor.from_array(EPS_LOWER @ self.array, self.dotted, upper=False)


def as_spinor(x, dotted: bool = False) -> Spinor:
    if isinstance(x, Spinor):
        return x
    return Spinor.from_array(x, dotted=dotted)


def contract(a, b) -> complex:
    """``a_alpha b^alpha``, i.e. the determinant of the matrix stacking a over b.

    Both arguments must be lower-index spinors of the same chirality; plain
    arrays are taken as lower undotted.
    """
    a, b = as_spinor(a), as_spinor(b)
    if a.dotted != b.dotted:
        raise ChiralityMismatch("cannot contract dotted with undotted spinor")
    if a.upper or b.upper:
        raise ChiralityMismatch("contract expects two lower-index spinors")
    return a.c1 * b.c2 - a.c2 * b.c1


def outer(a, b=None) -> np.ndarray:
    """The bispinor ``a_alpha conj(b)_beta'`` (``b`` defaults to ``a``)."""
    a = as_spinor(a).array
    b = a if b is None else as_spinor(b).array
    return np.outer(a, b.conj())


def vector_to_bispinor(p) -> np.ndarray:
    p = np.asarray(p, dtype=complex)
    if p.shape != (4,):
        raise ValueError(f"4-vector expected, got shape {p.shape}")
    return np.array(
        [[p[0] + p[3], p[1] - 1j * p[2]], [p[1] + 1j * p[2], p[0] - p[3]]],
        dtype=complex,
    )


def vector_to_bispinor_bar(p) -> np.ndarray:
    """``p_mu sigmabar^mu`` with ``sigmabar^mu = (-1, sigma)``."""
    p = np.asarray(p, dtype=complex)
    return np.einsum("m,mab->ab", p, SIGMA_BAR)


def bispinor_to_vector(m) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.shape != (2, 2):
        raise ValueError(f"2x2 matrix expected, got shape {m.shape}")
    return np.array(
        [
            (m[0, 0] + m[1, 1]) / 2,
            (m[0, 1] + m[1, 0]) / 2,
            1j * (m[0, 1] - m[1, 0]) / 2,
            (m[0, 0] - m[1, 1]) / 2,
        ],
        dtype=complex,
    )


def real_vector(p, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Drop imaginary parts of a 4-vector, refusing if any exceeds ``tol``."""
    p = np.asarray(p, dtype=complex)
    if np.max(np.abs(p.imag)) > tol:
        raise ValueError("4-vector has non-negligible imaginary part")
    return p.real.copy()


def minkowski_square(p) -> complex:
    p = np.asarray(p)
    return p[0] ** 2 - p[1] ** 2 - p[2] ** 2 - p[3] ** 2


def det2(m) -> complex:
    return m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]


def mass_squared(m) -> complex:
    """``det p``; real for Hermitian ``p`` and equal to ``-p^mu p_mu``."""
    return det2(np.asarray(m, dtype=complex))


def mass_squared_sigma_bar(m) -> complex:
    """``-1/2 p_{a b'} p^{b' a}``, with the upper-index form built from sigmabar."""
    m = np.asarray(m, dtype=complex)
    upper = vector_to_bispinor_bar(bispinor_to_vector(m))
    return -0.5 * np.trace(m @ upper)


def hermiticity_residual(m) -> float:
    m = np.asarray(m, dtype=complex)
    return float(np.max(np.abs(m - m.conj().T)))


def is_hermitian(m, tol: float = DEFAULT_TOL) -> bool:
    return hermiticity_residual(m) <= tol
