"""Line elements on momentum space and their finite-difference checks.

Metrics are squared-length functionals ``g(point, tangent)``.  The flat metric
is ``dp^mu dp_mu = -dp0^2 + |dp|^2``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .decomposition import (
    CosetRepReal,
    HyperbolicCoords,
    Regime,
    coset_from_hyperbolic,
    hyperbolic_to_momentum,
)
from .spinor_core import PAULI

DEFAULT_FD_STEP = 1e-5
# Richardson ratios need truncation error well above float64 round-off
DEFAULT_RICHARDSON_STEP = 1e-2


@dataclass(frozen=True)
class MetricSample:
    point: tuple
    tangent: tuple
    squared_length: float


def flat_metric(dp) -> float:
    dp = np.asarray(dp, dtype=float)
    return float(-dp[0] ** 2 + dp[1] ** 2 + dp[2] ** 2 + dp[3] ** 2)


def euclidean_metric(dx) -> float:
    dx = np.asarray(dx, dtype=float)
    return float(np.dot(dx, dx))


def coordinate_metric_real(point: Sequence[float], tangent: Sequence[float]) -> float:
    m, zeta, theta, _ = point
    dm, dzeta, dtheta, dphi = tangent
    sh = math.sinh(zeta)
    return -(dm**2) + m**2 * (dzeta**2 + sh**2 * (dtheta**2 + math.sin(theta) ** 2 * dphi**2))


def coordinate_metric_imag(point: Sequence[float], tangent: Sequence[float]) -> float:
    k, zeta, theta, _ = point
    dk, dzeta, dtheta, dphi = tangent
    ch = math.cosh(zeta)
    return dk**2 + k**2 * (-(dzeta**2) + ch**2 * (dtheta**2 + math.sin(theta) ** 2 * dphi**2))


def s4_conformal_metric(point: Sequence[float], tangent: Sequence[float]) -> float:
    zeta, theta, _, _ = point
    dzeta, dtheta, dphi, dpsi = tangent
    sh = math.sinh(zeta)
    bracket = dzeta**2 + sh**2 * (dtheta**2 + math.sin(theta) ** 2 * dphi**2) + dpsi**2
    return bracket / math.cosh(zeta) ** 2


def real_chart(x, energy_sign: int = 1) -> np.ndarray:
    m, zeta, theta, phi = x
    return hyperbolic_to_momentum(HyperbolicCoords(m, zeta, theta, phi, energy_sign), Regime.REAL)


def imag_chart(x) -> np.ndarray:
    k, zeta, theta, phi = x
    return hyperbolic_to_momentum(HyperbolicCoords(k, zeta, theta, phi), Regime.IMAGINARY)


def s4_chart(x) -> np.ndarray:
    """``(p1, p2, p3, mu1, mu2)`` on the slice ``p0 = m cosh(zeta) = 1``."""
    zeta, theta, phi, psi = x
    m = 1 / math.cosh(zeta)
    t = math.tanh(zeta)
    return np.array(
        [
            t * math.sin(theta) * math.cos(phi),
            t * math.sin(theta) * math.sin(phi),
            t * math.cos(theta),
            m * math.cos(psi),
            m * math.sin(psi),
        ]
    )


def coset_chart(x) -> np.ndarray:
    """``(Re c, Im c, lambda)`` of the coset representative at ``(zeta, theta, phi)``."""
    zeta, theta, phi = x
    rep = coset_from_hyperbolic(HyperbolicCoords(1.0, zeta, theta, phi))
    return np.array([rep.c.real, rep.c.imag, rep.lam])


def jacobian_fd(f: Callable, x, h: float = DEFAULT_FD_STEP) -> np.ndarray:
    """Central-difference Jacobian ``df_i/dx_j``."""
    x = np.asarray(x, dtype=float)
    cols = []
    for j in range(x.size):
        e = np.zeros_like(x)
        e[j] = h
        cols.append((np.asarray(f(x + e)) - np.asarray(f(x - e))) / (2 * h))
    return np.column_stack(cols)


def pullback_fd(f: Callable, point, tangent, metric: Callable = flat_metric, h: float = DEFAULT_FD_STEP):
    """``metric(J v)`` with ``J`` the finite-difference Jacobian of ``f``.

    Returns ``(value, scale)``; ``scale = |J v|^2`` (Euclidean) normalizes
    errors of indefinite metrics.
    """
    dx = jacobian_fd(f, point, h) @ np.asarray(tangent, dtype=float)
    return metric(dx), euclidean_metric(dx)


def richardson_ratio(f: Callable, x, h: float = DEFAULT_RICHARDSON_STEP) -> float:
    """``|D(h) - D(h/2)| / |D(h/2) - D(h/4)|``; tends to 4 for a second-order scheme."""
    d1, d2, d4 = (jacobian_fd(f, x, s) for s in (h, h / 2, h / 4))
    return float(np.linalg.norm(d1 - d2) / np.linalg.norm(d2 - d4))


def relative_error(approx: float, exact: float, scale: float) -> float:
    return abs(approx - exact) / max(scale, abs(exact), np.finfo(float).tiny)


def maurer_cartan_form(rep: CosetRepReal, dc: complex, dlam: float, h: float = DEFAULT_FD_STEP) -> np.ndarray:
    """``dF F^-1`` with ``dF`` from a central difference along ``(dc, dlam)``.

    Central differences at ``h`` and ``h/2`` are Richardson-combined, so the
    truncation error is fourth order and small ``lam`` stays accurate.
    """

    def central(s):
        fp = CosetRepReal(rep.c + s * dc, rep.lam + s * dlam).matrix()
        fm = CosetRepReal(rep.c - s * dc, rep.lam - s * dlam).matrix()
        return (fp - fm) / (2 * s)

    f = rep.matrix()
    f_inv = np.array([[f[1, 1], -f[0, 1]], [-f[1, 0], f[0, 0]]])
    df = (4 * central(h / 2) - central(h)) / 3
    return df @ f_inv


def maurer_cartan_frame(rep: CosetRepReal, dc: complex, dlam: float, h: float = DEFAULT_FD_STEP):
    """Split ``dF F^-1 = (e + i f) . sigma / 2`` into real vectors ``e`` and ``f``."""
    x = maurer_cartan_form(rep, dc, dlam, h)
    z = np.array([np.trace(x @ s) for s in PAULI])
    return z.real, z.imag


def maurer_cartan_metric(rep: CosetRepReal, dc: complex, dlam: float, h: float = DEFAULT_FD_STEP) -> float:
    e, _ = maurer_cartan_frame(rep, dc, dlam, h)
    return float(np.dot(e, e))


def coset_metric_closed(rep: CosetRepReal, dc: complex, dlam: float) -> float:
    return abs(dc) ** 2 / rep.lam**4 + 4 * dlam**2 / rep.lam**2


def sample(metric: Callable, point, tangent) -> MetricSample:
    return MetricSample(tuple(point), tuple(tangent), float(metric(point, tangent)))
