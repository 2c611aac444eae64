"""Momentum from spinor pairs, gauge fixing, hyperbolic charts and the inverse map.

The pair ``(pi, omega)`` is stacked into ``A = [[pi_1, pi_2], [omega_1, omega_2]]``.
Real mass: ``p = s (A^dag A)^T`` with U(2) gauge freedom ``A -> U A``.
Imaginary mass: ``p = s (A^dag sigma_3 A)^T`` with U(1,1) gauge freedom.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import DegenerateInput, NotHermitian, NullMomentum, ZeroMass, ZeroMomentum
from .spinor_core import (
    DEFAULT_TOL,
    SIGMA_3,
    Spinor,
    bispinor_to_vector,
    det2,
    hermiticity_residual,
    minkowski_square,
    real_vector,
    vector_to_bispinor,
)

TWO_PI = 2.0 * math.pi


class Regime(str, Enum):
    REAL = "real_mass"
    IMAGINARY = "imaginary_mass"


@dataclass(frozen=True, eq=False)
class SpinorPairMatrix:
    matrix: np.ndarray
    sign: int = 1
    regime: Regime = Regime.REAL

    def __post_init__(self):
        a = np.array(self.matrix, dtype=complex)
        if a.shape != (2, 2):
            raise ValueError(f"A must be 2x2, got {a.shape}")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        a.setflags(write=False)
        object.__setattr__(self, "matrix", a)
        object.__setattr__(self, "regime", Regime(self.regime))

    @classmethod
    def from_spinors(cls, pi, omega, sign: int = 1, regime=Regime.REAL) -> "SpinorPairMatrix":
        return cls(np.array([pi, omega], dtype=complex), sign, regime)

    @property
    def pi(self) -> Spinor:
        return Spinor.from_array(self.matrix[0])

    @property
    def omega(self) -> Spinor:
        return Spinor.from_array(self.matrix[1])


def _matrix(a) -> np.ndarray:
    if isinstance(a, SpinorPairMatrix):
        return a.matrix
    return np.asarray(a, dtype=complex)


def momentum_from_pair(pair: SpinorPairMatrix) -> np.ndarray:
    """``+-(pi pibar +- omega omegabar)`` as a 2x2 bispinor."""
    a = pair.matrix
    metric = np.eye(2) if pair.regime is Regime.REAL else SIGMA_3.real
    return pair.sign * (a.conj().T @ metric @ a).T


def complex_mass(a) -> complex:
    """``mu = det A = (pi . omega)``."""
    return complex(det2(_matrix(a)))


def normalize_sl2c(a, tol: float = DEFAULT_TOL, branch: int = 1):
    """Split ``A = sqrt(mu) A'`` with ``det A' = 1``.

    ``branch=-1`` takes the other square root; the two results differ by
    ``-1 in SU(2)`` and are therefore gauge equivalent.
    """
    a = _matrix(a)
    mu = complex(det2(a))
    if abs(mu) <= tol:
        raise ZeroMass("det A vanishes; use the conifold factorization")
    root = branch * cmath.sqrt(mu)
    return mu, a / root


@dataclass(frozen=True)
class CosetRepReal:
    c: complex
    lam: float

    def matrix(self) -> np.ndarray:
        c, lam = self.c, self.lam
        return np.array([[c / lam, 1 / lam], [-lam, 0]], dtype=complex)


@dataclass(frozen=True)
class CosetRepImag:
    zeta: float
    theta: float
    phi: float

    def matrix(self) -> np.ndarray:
        return imag_coset_matrix(self.zeta, self.theta, self.phi)


def imag_coset_matrix(zeta, theta, phi) -> np.ndarray:
    ep, em = math.exp(zeta / 2), math.exp(-zeta / 2)
    ct, st = math.cos(theta / 2), math.sin(theta / 2)
    ph = cmath.exp(1j * phi)
    return np.array(
        [[ep * ct, ep * ph * st], [-em * st / ph, em * ct]],
        dtype=complex,
    )


def _inv_det1(m: np.ndarray) -> np.ndarray:
    return np.array([[m[1, 1], -m[0, 1]], [-m[1, 0], m[0, 0]]], dtype=complex)


def _require_det1(a: np.ndarray, tol: float) -> None:
    if abs(det2(a) - 1) > max(tol, 1e-8):
        raise DegenerateInput(f"expected det A' = 1, got {complex(det2(a))}")


def gauge_fix_real(a_prime, tol: float = DEFAULT_TOL):
    """Write ``A' = U F(c, lambda)`` with ``U`` in SU(2) and ``lambda > 0``."""
    a = _matrix(a_prime)
    _require_det1(a, tol)
    g = a.conj().T @ a
    g22 = g[1, 1].real
    lam = 1.0 / math.sqrt(g22)
    c = complex(np.conj(g[0, 1])) / g22
    rep = CosetRepReal(c, lam)
    u = a @ _inv_det1(rep.matrix())
    return u, rep


def _angles(v: np.ndarray) -> tuple[float, float]:
    """Polar and azimuthal angle of a real 3-vector, azimuth in [0, 2pi)."""
    rho = math.hypot(v[0], v[1])
    theta = math.atan2(rho, v[2])
    phi = math.atan2(v[1], v[0]) % TWO_PI
    if phi >= TWO_PI:
        phi = 0.0
    return theta, phi


def gauge_fix_imag(a_prime, tol: float = DEFAULT_TOL):
    """Write ``A' = V M(zeta, theta, phi)`` with ``V^dag sigma_3 V = sigma_3``."""
    a = _matrix(a_prime)
    _require_det1(a, tol)
    p = bispinor_to_vector((a.conj().T @ SIGMA_3 @ a).T).real
    zeta = math.asinh(p[0])
    theta, phi = _angles(p[1:])
    rep = CosetRepImag(zeta, theta, phi)
    v = a @ _inv_det1(rep.matrix())
    return v, rep


def coset_to_momentum(rep: CosetRepReal, m: float) -> np.ndarray:
    c, lam = rep.c, rep.lam
    plus = m * (abs(c) ** 2 / lam**2 + lam**2)
    minus = m / lam**2
    z = m * c / lam**2  # p1 - i p2
    return np.array([(plus + minus) / 2, z.real, -z.imag, (plus - minus) / 2])


def boost_coset(rep: CosetRepReal, kappa: float) -> CosetRepReal:
    """``lambda -> kappa lambda, c -> kappa^2 c``: a boost in the (p0, p3) plane."""
    return CosetRepReal(rep.c * kappa**2, rep.lam * kappa)


def rescale_coset_lambda(rep: CosetRepReal, kappa: float) -> CosetRepReal:
    """``lambda -> kappa lambda`` at fixed ``c``.

    Rescales the rows of F reciprocally (``pi -> pi / kappa``, ``omega -> kappa omega``):
    det is unchanged but the momentum is not, so this is not a gauge symmetry.
    """
    return CosetRepReal(rep.c, rep.lam * kappa)


@dataclass(frozen=True)
class HyperbolicCoords:
    mass_scale: float
    zeta: float
    theta: float
    phi: float
    energy_sign: int = 1
    regime: Regime = field(default=Regime.REAL)


def hyperbolic_to_momentum(h: HyperbolicCoords, regime=None) -> np.ndarray:
    regime = Regime(regime) if regime is not None else Regime(h.regime)
    ch, sh = math.cosh(h.zeta), math.sinh(h.zeta)
    n = np.array(
        [math.sin(h.theta) * math.cos(h.phi), math.sin(h.theta) * math.sin(h.phi), math.cos(h.theta)]
    )
    if regime is Regime.REAL:
        return h.mass_scale * np.concatenate([[h.energy_sign * ch], sh * n])
    return h.mass_scale * np.concatenate([[sh], ch * n])


def _null_gate(det: float, scale: float, tol: float) -> bool:
    return abs(det) <= tol * max(1.0, scale)


def momentum_to_hyperbolic(p, tol: float = DEFAULT_TOL) -> HyperbolicCoords:
    p = real_vector(p, tol)
    det = float(minkowski_square(p))
    if _null_gate(det, float(np.dot(p, p)), tol):
        raise NullMomentum("null momentum has no hyperbolic coordinates")
    theta, phi = _angles(p[1:])
    spatial = float(np.linalg.norm(p[1:]))
    if det > 0:
        m = math.sqrt(det)
        sign = 1 if p[0] > 0 else -1
        return HyperbolicCoords(m, math.asinh(spatial / m), theta, phi, sign, Regime.REAL)
    k = math.sqrt(-det)
    return HyperbolicCoords(k, math.asinh(p[0] / k), theta, phi, 1, Regime.IMAGINARY)


def coset_from_hyperbolic(h: HyperbolicCoords) -> CosetRepReal:
    """Real-mass coset representative for the point ``(zeta, theta, phi)``.

    ``cosh z - sinh z cos t`` is evaluated as ``e^-z + 2 sinh z sin^2(t/2)``
    to avoid cancellation at large rapidity.
    """
    sh = math.sinh(h.zeta)
    d = math.exp(-h.zeta) + 2 * sh * math.sin(h.theta / 2) ** 2
    c = sh * math.sin(h.theta) * cmath.exp(-1j * h.phi) / d
    return CosetRepReal(c, d**-0.5)


def _fix_phase(v: np.ndarray) -> np.ndarray:
    """Make the first non-negligible component of a unit vector real positive."""
    for x in v:
        if abs(x) > 1e-12:
            return v * (abs(x) / x)
    return v


def decompose_momentum(p, tol: float = DEFAULT_TOL) -> SpinorPairMatrix:
    """Canonical ``A`` with ``momentum_from_pair(A) = p``.

    Timelike: Hermitian square root of ``s p^T`` with ``s = sign(tr p)``.
    Spacelike: ``A = diag(sqrt a, sqrt b) W^dag`` from ``p^T = W diag(a, -b) W^dag``.
    Null: ``p = s pi pibar`` with ``omega = 0``.
    """
    p = np.asarray(p, dtype=complex)
    if p.shape == (4,):
        p = vector_to_bispinor(p)
    if hermiticity_residual(p) > tol * max(1.0, float(np.max(np.abs(p)))):
        raise NotHermitian("momentum bispinor is not Hermitian")
    p = (p + p.conj().T) / 2
    if float(np.max(np.abs(p))) <= tol:
        raise ZeroMomentum("p = 0 has no spinor decomposition")
    det = float(det2(p).real)
    trace = float(np.trace(p).real)
    scale = float(np.sum(np.abs(p) ** 2)) / 2
    sign = 1 if trace >= 0 else -1

    if _null_gate(det, scale, tol):
        w, vecs = np.linalg.eigh(sign * p)
        pi = math.sqrt(max(w[1], 0.0)) * _fix_phase(vecs[:, 1])
        return SpinorPairMatrix(np.array([pi, [0, 0]], dtype=complex), sign, Regime.REAL)

    if det > 0:
        w, vecs = np.linalg.eigh(sign * p.T)
        w = np.clip(w, 0.0, None)
        root = (vecs * np.sqrt(w)) @ vecs.conj().T
        return SpinorPairMatrix(root, sign, Regime.REAL)

    w, vecs = np.linalg.eigh(p.T)
    a, b = w[1], -w[0]
    ww = np.column_stack([_fix_phase(vecs[:, 1]), _fix_phase(vecs[:, 0])])
    mat = np.diag([math.sqrt(a), math.sqrt(b)]) @ ww.conj().T
    return SpinorPairMatrix(mat, 1, Regime.IMAGINARY)


def mass_regime(p, tol: float = DEFAULT_TOL) -> str:
    """``"timelike"``, ``"spacelike"`` or ``"null"`` for a Hermitian bispinor."""
    p = np.asarray(p, dtype=complex)
    det = float(det2(p).real)
    if _null_gate(det, float(np.sum(np.abs(p) ** 2)) / 2, tol):
        return "null"
    return "timelike" if det > 0 else "spacelike"
