"""Two-qubit pure states read off the spinor-pair matrix ``A``.

``|Psi> = (1/sqrt 2) sum A_{i alpha} |i>_A |alpha>_B``, so the reduced density
matrix of qubit B is half the real-mass, positive-energy momentum bispinor
and the concurrence is the mass ``|det A|``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .decomposition import SpinorPairMatrix
from .errors import NotNormalized, NotSpecialUnitary, OutOfRange
from .spinor_core import DEFAULT_TOL, PAULI, bispinor_to_vector, det2

NORM_TOL = 1e-10


def _matrix(a) -> np.ndarray:
    if isinstance(a, SpinorPairMatrix):
        return a.matrix
    return np.asarray(a, dtype=complex)


def state_vector(a) -> np.ndarray:
    """Amplitudes ordered ``|11>, |12>, |21>, |22>``."""
    return _matrix(a).reshape(4) / math.sqrt(2)


def state_norm_squared(a) -> float:
    a = _matrix(a)
    return float(np.sum(a.real**2 + a.imag**2)) / 2


def normalize_state(a) -> np.ndarray:
    """Rescale ``A`` to unit state norm (``p0 = 1``)."""
    a = _matrix(a)
    n = state_norm_squared(a)
    if n == 0:
        raise NotNormalized("zero state cannot be normalized")
    return a / math.sqrt(n)


def from_state_vector(psi) -> np.ndarray:
    return np.asarray(psi, dtype=complex).reshape(2, 2) * math.sqrt(2)


def reduced_density_matrices(a):
    a = _matrix(a)
    rho_a = (a @ a.conj().T) / 2
    rho_b = (a.conj().T @ a).T / 2
    return rho_a, rho_b


def _require_normalized(a: np.ndarray, tol: float) -> None:
    n = state_norm_squared(a)
    if abs(n - 1) > tol:
        raise NotNormalized(f"state norm^2 = tr rho = {n}, expected 1")


def concurrence(a, tol: float = NORM_TOL) -> float:
    a = _matrix(a)
    _require_normalized(a, tol)
    return float(abs(det2(a)))


def entropy_eigenvalues(m: float) -> tuple[float, float]:
    """``lambda_pm = (1 +- sqrt(1 - m^2)) / 2``.

    The small eigenvalue is taken as ``m^2 / (4 lambda_+)`` to keep precision
    near ``m = 0``.
    """
    lp = (1 + math.sqrt(1 - m * m)) / 2
    return lp, m * m / (4 * lp)


def _xlog2x(x: float) -> float:
    return 0.0 if x == 0 else x * math.log2(x)


def von_neumann_entropy(m: float) -> float:
    if not 0 <= m <= 1:
        raise OutOfRange(f"concurrence must lie in [0, 1], got {m}")
    lp, lm = entropy_eigenvalues(m)
    return 0.0 - (_xlog2x(lp) + _xlog2x(lm))


def entropy_from_spectrum(rho) -> float:
    """``-sum lambda log2 lambda`` over the eigenvalues of a density matrix."""
    w = np.linalg.eigvalsh(np.asarray(rho, dtype=complex))
    return 0.0 - sum(_xlog2x(max(float(x), 0.0)) for x in w)


def is_special_unitary(u, tol: float = DEFAULT_TOL) -> bool:
    u = np.asarray(u, dtype=complex)
    return (
        np.max(np.abs(u @ u.conj().T - np.eye(2))) <= tol
        and abs(det2(u) - 1) <= tol
    )


def apply_local_unitaries(a, u_a, u_b, tol: float = DEFAULT_TOL) -> np.ndarray:
    """``(U_A (x) U_B)|Psi>`` expressed on ``A``: ``A' = U_A A U_B^T``.

    Under this action ``rho_A -> U_A rho_A U_A^dag`` and
    ``rho_B -> U_B rho_B U_B^dag``.
    """
    for name, u in (("U_A", u_a), ("U_B", u_b)):
        if not is_special_unitary(u, tol):
            raise NotSpecialUnitary(f"{name} is not in SU(2)")
    return np.asarray(u_a) @ _matrix(a) @ np.asarray(u_b).T


def rotation_matrix(u) -> np.ndarray:
    """SO(3) matrix of the adjoint action ``U sigma_j U^dag = R_ij sigma_i``."""
    u = np.asarray(u, dtype=complex)
    return np.array(
        [[np.trace(PAULI[i] @ u @ PAULI[j] @ u.conj().T).real / 2 for j in range(3)] for i in range(3)]
    )


@dataclass(frozen=True)
class HopfBasePoint:
    p1: float
    p2: float
    p3: float
    mu1: float
    mu2: float

    def as_array(self) -> np.ndarray:
        return np.array([self.p1, self.p2, self.p3, self.mu1, self.mu2])

    def constraint_residual(self) -> float:
        return abs(float(np.sum(self.as_array() ** 2)) - 1)


def hopf_base_point(a, tol: float = NORM_TOL) -> HopfBasePoint:
    """Image on the unit S^4: the spatial momentum ``2 rho_B`` and ``mu = det A``."""
    a = _matrix(a)
    _require_normalized(a, tol)
    _, rho_b = reduced_density_matrices(a)
    p = bispinor_to_vector(2 * rho_b).real
    mu = complex(det2(a))
    return HopfBasePoint(float(p[1]), float(p[2]), float(p[3]), mu.real, mu.imag)


class Stratum(str, Enum):
    MAXIMAL = "maximal_point"
    GENERIC = "generic_S2xS1"
    SEPARABLE = "separable_S2"


def classify_stratum(a, tol: float = NORM_TOL) -> Stratum:
    m = concurrence(a, tol)
    if m >= 1 - tol:
        return Stratum.MAXIMAL
    if m <= tol:
        return Stratum.SEPARABLE
    return Stratum.GENERIC
