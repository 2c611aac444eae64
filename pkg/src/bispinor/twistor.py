"""Momentum twistors ``Z = (pi_a, omegabar^a')`` and the incidence relation.

The incidence relation is ``i p_{a b'} omegabar^{b'} = pi_a``.  Twistors are
kept as homogeneous coordinates; the projective quotient only enters through
``projective_equal``.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .decomposition import Regime, SpinorPairMatrix
from .errors import (
    DegenerateInput,
    DegeneratePair,
    ExcludedLine,
    NoSolution,
    NotDegenerate,
    NotNullNorm,
    ZeroMatrix,
    ZeroMomentum,
    ZeroOmega,
    ZeroTwistor,
)
from .spinor_core import DEFAULT_TOL, EPS_LOWER, EPS_UPPER, SIGMA, SIGMA_3, contract, det2, outer

NULL_NORM_TOL = 1e-8

PHI = np.block([[np.zeros((2, 2)), np.eye(2)], [np.eye(2), np.zeros((2, 2))]]).astype(complex)


@dataclass(frozen=True, eq=False)
class Twistor:
    z: np.ndarray

    def __post_init__(self):
        z = np.array(self.z, dtype=complex)
        if z.shape != (4,):
            raise ValueError(f"twistor needs 4 components, got {z.shape}")
        z.setflags(write=False)
        object.__setattr__(self, "z", z)

    @classmethod
    def from_spinors(cls, pi, omega) -> "Twistor":
        """Build ``(pi_a, omegabar^a')`` from lower-index ``pi_a`` and ``omega_a``."""
        omega_bar_upper = EPS_UPPER @ np.conj(np.asarray(omega, dtype=complex))
        return cls(np.concatenate([np.asarray(pi, dtype=complex), omega_bar_upper]))

    @property
    def pi(self) -> np.ndarray:
        return self.z[:2]

    @property
    def omega_bar_upper(self) -> np.ndarray:
        return self.z[2:]

    @property
    def omega(self) -> np.ndarray:
        """Lower-index ``omega_a`` recovered from ``omegabar^a'``."""
        return EPS_LOWER @ np.conj(self.z[2:])

    def dual(self) -> np.ndarray:
        """``Zbar_A = (Z^dag)^B Phi_BA = (omega^a, pibar_a')``."""
        return self.z.conj() @ PHI

    @property
    def on_excluded_line(self) -> bool:
        return not np.any(self.z[2:])


def _twistor(z) -> Twistor:
    return z if isinstance(z, Twistor) else Twistor(z)


def pi_dot_omega(z) -> complex:
    z = _twistor(z)
    return contract(z.pi, z.omega)


def twistor_norm(z) -> float:
    """``Zbar_A Z^A = (pi . omega) + conj(pi . omega)``."""
    z = _twistor(z)
    return float((z.dual() @ z.z).real)


def generalized_norm(z, psi: float) -> float:
    """``e^{-i psi} (pi . omega) + c.c.``"""
    return 2.0 * (cmath.exp(-1j * psi) * pi_dot_omega(z)).real


class NormDomain(str, Enum):
    POSITIVE = "positive"
    NULL = "null"
    NEGATIVE = "negative"


def norm_domain(z, tol: float = NULL_NORM_TOL) -> NormDomain:
    z = _twistor(z)
    n = twistor_norm(z)
    if abs(n) <= tol * max(1.0, np.linalg.norm(z.pi) * np.linalg.norm(z.omega)):
        return NormDomain.NULL
    return NormDomain.POSITIVE if n > 0 else NormDomain.NEGATIVE


def incidence_residual(p, z) -> float:
    return generalized_incidence_residual(p, z, 0.0)


def generalized_incidence_residual(p, z, psi: float) -> float:
    """Max-norm of ``i e^{i psi} p omegabar - pi``."""
    z = _twistor(z)
    p = np.asarray(p, dtype=complex)
    lhs = 1j * cmath.exp(1j * psi) * (p @ z.omega_bar_upper)
    return float(np.max(np.abs(lhs - z.pi)))


def min_hermitian_incidence_residual(z) -> float:
    """Least-squares residual of the incidence relation over Hermitian ``p``.

    ``p = x_mu sigma^mu`` with real ``x`` turns the relation into a real linear
    system; the residual vanishes exactly when the twistor norm does.
    """
    z = _twistor(z)
    ob = z.omega_bar_upper
    cols = [1j * (s @ ob) for s in SIGMA]
    m = np.array([np.concatenate([c.real, c.imag]) for c in cols]).T
    rhs = np.concatenate([z.pi.real, z.pi.imag])
    x, *_ = np.linalg.lstsq(m, rhs, rcond=None)
    return float(np.linalg.norm(m @ x - rhs))


def expand_in_basis(p, a, b) -> tuple[complex, complex, complex, complex]:
    """Coefficients of ``p = c1 a abar + c2 a bbar + c3 b abar + c4 b bbar``."""
    s = np.column_stack([np.asarray(a, dtype=complex), np.asarray(b, dtype=complex)])
    s_inv = np.linalg.inv(s)
    c = s_inv @ np.asarray(p, dtype=complex) @ s_inv.conj().T
    return complex(c[0, 0]), complex(c[0, 1]), complex(c[1, 0]), complex(c[1, 1])


@dataclass(frozen=True, eq=False)
class IncidenceFamily:
    """Hermitian momenta incident with a null twistor, labelled by ``m^2``.

    ``p(m2) = sign (pi0 pi0bar + m2 omega0 omega0bar)`` with
    ``(pi0, omega0) = (pi, omega) / r`` and ``pi0 . omega0 = sign * i``.
    """

    twistor: Twistor
    pi0: np.ndarray
    omega0: np.ndarray
    sign: int
    r: float

    def momentum(self, m2: float) -> np.ndarray:
        return self.sign * (outer(self.pi0) + m2 * outer(self.omega0))

    __call__ = momentum

    def coefficients(self, p) -> tuple[complex, complex, complex, complex]:
        return expand_in_basis(p, self.pi0, self.omega0)


def solve_incidence_family(z, tol: float = NULL_NORM_TOL) -> IncidenceFamily:
    z = _twistor(z)
    pi, omega = z.pi, z.omega
    scale = float(np.linalg.norm(pi) * np.linalg.norm(omega))
    po = contract(pi, omega)
    if scale == 0 or abs(po) <= DEFAULT_TOL * scale:
        raise DegeneratePair("pi . omega = 0; use classify_degenerate")
    if abs(2 * po.real) > tol * scale:
        raise NotNullNorm(f"twistor norm {2 * po.real} is not zero")
    sign = 1 if po.imag > 0 else -1
    r = math.sqrt(abs(po))
    return IncidenceFamily(z, pi / r, omega / r, sign, r)


@dataclass(frozen=True, eq=False)
class CzachorPair:
    """``p = sign (pihat pihatbar + m2 omegahat omegahatbar)``, ``pihat . omegahat = e^{i psi}``."""

    pi_hat: np.ndarray
    omega_hat: np.ndarray
    m2: float
    sign: int = 1
    psi: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "pi_hat", np.asarray(self.pi_hat, dtype=complex))
        object.__setattr__(self, "omega_hat", np.asarray(self.omega_hat, dtype=complex))
        k = contract(self.pi_hat, self.omega_hat)
        if abs(abs(k) - 1) > 1e-8:
            raise DegenerateInput(f"|pihat . omegahat| must be 1, got {abs(k)}")
        if self.psi is None:
            object.__setattr__(self, "psi", cmath.phase(k))
        elif abs(k - cmath.exp(1j * self.psi)) > 1e-8:
            raise DegenerateInput("pihat . omegahat does not equal e^{i psi}")


def czachor_reconstruct(cp: CzachorPair) -> np.ndarray:
    return cp.sign * (outer(cp.pi_hat) + cp.m2 * outer(cp.omega_hat))


def czachor_matrix(cp: CzachorPair) -> np.ndarray:
    """``C = [[pihat], [sqrt|m2| omegahat]]``."""
    return np.array([cp.pi_hat, math.sqrt(abs(cp.m2)) * cp.omega_hat])


def czachor_reconstruct_matrix(cp: CzachorPair) -> np.ndarray:
    """Same momentum via ``+-(C^dag C)^T`` or ``+-(C^dag sigma_3 C)^T``."""
    c = czachor_matrix(cp)
    metric = np.eye(2) if cp.m2 >= 0 else SIGMA_3
    return cp.sign * (c.conj().T @ metric @ c).T


def czachor_from_pair(pair: SpinorPairMatrix) -> CzachorPair:
    """Czachor data with ``pihat = pi`` and ``omegahat = omega / |det A|``.

    This choice reproduces ``momentum_from_pair(pair)`` exactly.
    """
    a = pair.matrix
    m = abs(det2(a))
    if m == 0:
        raise DegenerateInput("det A = 0")
    m2 = m * m if pair.regime is Regime.REAL else -m * m
    return CzachorPair(a[0], a[1] / m, m2, pair.sign)


def czachor_matrix_from_pair(pair: SpinorPairMatrix) -> np.ndarray:
    """``C = diag(1, m) A / |det A|^{1/2}``."""
    a = pair.matrix
    m = abs(det2(a))
    return np.diag([1.0, m]) @ a / math.sqrt(m)


def woodhouse_reconstruct(pi_hat, omega_hat, m: float, sign: int = 1, relative_sign: int = 1) -> np.ndarray:
    """``sign * m (pihat pihatbar + relative_sign omegahat omegahatbar)``."""
    k = contract(pi_hat, omega_hat)
    if abs(abs(k) - 1) > 1e-8:
        raise DegenerateInput(f"|pihat . omegahat| must be 1, got {abs(k)}")
    return sign * m * (outer(pi_hat) + relative_sign * outer(omega_hat))


def woodhouse_from_pair(pair: SpinorPairMatrix):
    """``(pihat, omegahat, m)`` with both spinors divided by ``sqrt|det A|``."""
    a = pair.matrix
    m = abs(det2(a))
    s = math.sqrt(m)
    return a[0] / s, a[1] / s, m


def phase_rotated(z, branch: int) -> Twistor:
    """``(pi, omega) -> e^{-i(psi/2 + branch pi/4)} (pi, omega)`` with ``psi = arg(pi . omega)``.

    The result has ``pi . omega = -branch * i r^2``.
    """
    z = _twistor(z)
    psi = cmath.phase(pi_dot_omega(z))
    f = cmath.exp(-1j * (psi / 2 + branch * math.pi / 4))
    return Twistor.from_spinors(f * z.pi, f * z.omega)


class DegenerateCase(str, Enum):
    MASSLESS = "massless"
    TACHYON_PURE = "tachyon_pure"
    TACHYON_SHIFTED = "tachyon_shifted"


@dataclass(frozen=True, eq=False)
class DegenerateClassification:
    case: DegenerateCase
    k: complex
    lam: np.ndarray
    c4: float
    m2: float
    omega: np.ndarray

    @property
    def shifted_omega(self) -> np.ndarray:
        """``Omega = omega + lam / c4`` of the shifted-tachyon form."""
        return self.omega + self.lam / self.c4


def auxiliary_spinor(omega) -> np.ndarray:
    """The completion ``lam`` of ``omega`` with ``lam . omega = -1``."""
    omega = np.asarray(omega, dtype=complex)
    return np.array([-omega[1].conjugate(), omega[0].conjugate()]) / np.vdot(omega, omega).real


def degenerate_momentum(omega, c2: complex, c4: float) -> np.ndarray:
    """``c2 lam omegabar + c2* omega lambar + c4 omega omegabar``."""
    lam = auxiliary_spinor(omega)
    return c2 * outer(lam, omega) + np.conj(c2) * outer(omega, lam) + c4 * outer(omega)


def classify_degenerate(z, p, tol: float = DEFAULT_TOL) -> DegenerateClassification:
    """Classify a real momentum incident with a twistor on ``pi . omega = 0``."""
    z = _twistor(z)
    p = np.asarray(p, dtype=complex)
    omega = z.omega
    w = float(np.linalg.norm(omega))
    if w == 0:
        raise ZeroOmega("omega = 0")
    scale = max(1.0, float(np.max(np.abs(p)))) * max(1.0, w)
    if abs(contract(z.pi, omega)) > tol * max(1.0, float(np.linalg.norm(z.pi))) * max(1.0, w):
        raise NotDegenerate("pi . omega != 0; use solve_incidence_family")
    if float(np.max(np.abs(p))) <= tol:
        raise ZeroMomentum("p = 0")

    lam = auxiliary_spinor(omega)
    c1, c2, c3, c4 = expand_in_basis(p, lam, omega)
    v = 1j * (p @ z.omega_bar_upper)
    k = np.vdot(omega, v) / w**2
    if np.max(np.abs(v - k * omega)) > tol * scale or abs(c1) > tol * scale:
        raise NoSolution("p is not incident with omega for any k")
    if np.max(np.abs(v - z.pi)) > tol * scale:
        raise NoSolution("p is not incident with the given twistor")

    c4 = c4.real
    small_c2 = abs(c2) <= tol * scale
    small_c4 = abs(c4) <= tol * scale
    if small_c2:
        case = DegenerateCase.MASSLESS
    elif small_c4:
        case = DegenerateCase.TACHYON_PURE
    else:
        case = DegenerateCase.TACHYON_SHIFTED
    k = 1j * np.conj(c2) * np.conj(contract(lam, omega))
    return DegenerateClassification(case, complex(k), c2 * lam, c4, -abs(k) ** 2, omega)


def projection_mu(p, omega_bar_upper) -> Twistor:
    """``(p, omegabar) -> (i p omegabar, omegabar)``."""
    ob = np.asarray(omega_bar_upper, dtype=complex)
    if not np.any(ob):
        raise ExcludedLine("omegabar = 0 lies on the line removed from P^3")
    pi = 1j * (np.asarray(p, dtype=complex) @ ob)
    return Twistor(np.concatenate([pi, ob]))


def projection_nu(p, omega_bar_upper) -> np.ndarray:
    return np.asarray(p, dtype=complex)


def projective_equal(z1, z2, tol: float = DEFAULT_TOL) -> bool:
    a, b = _twistor(z1).z, _twistor(z2).z
    na, nb = np.linalg.norm(a), np.linalg.norm(b)
    if na == 0 or nb == 0:
        raise ZeroTwistor("the zero twistor is not a point of CP^3")
    eta = np.vdot(b, a) / nb**2
    return bool(np.linalg.norm(a - eta * b) <= tol * na)


def _canonical_factors(lam: np.ndarray, mu: np.ndarray):
    """Fix ``lam -> kappa lam, mu -> mu / kappa``: equal norms, leading ``lam`` entry real positive."""
    i = int(np.argmax(np.abs(lam)))
    kappa = math.sqrt(np.linalg.norm(mu) / np.linalg.norm(lam)) * abs(lam[i]) / lam[i]
    return lam * kappa, mu / kappa


def conifold_factorize(a, tol: float = DEFAULT_TOL):
    """Rank-one factorization ``A_{i alpha} = lam_i mu_alpha`` of a matrix with ``det A = 0``."""
    a = np.asarray(a.matrix if isinstance(a, SpinorPairMatrix) else a, dtype=complex)
    big = float(np.max(np.abs(a)))
    if big == 0:
        raise ZeroMatrix("A = 0 is not a point of the conifold")
    if abs(det2(a)) > tol * max(1.0, big**2):
        raise NotDegenerate(f"det A = {complex(det2(a))} is not zero")
    i, j = np.unravel_index(int(np.argmax(np.abs(a))), a.shape)
    lam = a[:, j].copy()
    mu = a[i, :] / a[i, j]
    return _canonical_factors(lam, mu)


def canonicalize_factors(lam, mu):
    return _canonical_factors(np.asarray(lam, dtype=complex), np.asarray(mu, dtype=complex))


def cp1_equal(u, v, tol: float = DEFAULT_TOL) -> bool:
    u, v = np.asarray(u, dtype=complex), np.asarray(v, dtype=complex)
    return abs(u[0] * v[1] - u[1] * v[0]) <= tol * np.linalg.norm(u) * np.linalg.norm(v)
