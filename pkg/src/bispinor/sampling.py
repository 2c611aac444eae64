"""Seeded random inputs for every regime.

The stream is PCG64 (numpy's ``PCG64``, seeded through ``SeedSequence(seed)``).
Uniforms take the top 53 bits of each raw 64-bit output; normals use the
Box-Muller transform on consecutive uniform pairs.  Only raw PCG64 outputs are
consumed, so the sequence does not depend on numpy's sampling internals.
"""
from __future__ import annotations

import math

import numpy as np

from .decomposition import Regime, SpinorPairMatrix
from .spinor_core import contract, vector_to_bispinor

_INV_2_53 = 1.0 / 9007199254740992.0


class Sampler:
    def __init__(self, seed: int):
        self.seed = int(seed)
        self._bits = np.random.PCG64(self.seed)

    def uniform(self, n: int | None = None, lo: float = 0.0, hi: float = 1.0):
        raw = self._bits.random_raw(1 if n is None else n)
        u = (raw >> np.uint64(11)).astype(np.float64) * _INV_2_53
        u = lo + (hi - lo) * u
        return float(u[0]) if n is None else u

    def normal(self, n: int | None = None):
        count = 1 if n is None else n
        pairs = (count + 1) // 2
        raw = self._bits.random_raw(2 * pairs)
        u1 = ((raw[0::2] >> np.uint64(11)).astype(np.float64) + 1.0) * _INV_2_53
        u2 = (raw[1::2] >> np.uint64(11)).astype(np.float64) * _INV_2_53
        rad = np.sqrt(-2.0 * np.log(u1))
        z = np.empty(2 * pairs)
        z[0::2] = rad * np.cos(2 * math.pi * u2)
        z[1::2] = rad * np.sin(2 * math.pi * u2)
        return float(z[0]) if n is None else z[:count]

    def complex_normal(self, n: int) -> np.ndarray:
        z = self.normal(2 * n)
        return z[0::2] + 1j * z[1::2]

    def angle(self) -> float:
        return self.uniform(None, 0.0, 2 * math.pi)

    def sign(self) -> int:
        return 1 if self.uniform() < 0.5 else -1

    # -- group elements ---------------------------------------------------
    def su2(self) -> np.ndarray:
        q = self.normal(4)
        q = q / np.linalg.norm(q)
        a, b = q[0] + 1j * q[1], q[2] + 1j * q[3]
        return np.array([[a, -b.conjugate()], [b, a.conjugate()]])

    def u2(self) -> np.ndarray:
        return np.exp(1j * self.angle()) * self.su2()

    def su11(self, spread: float = 0.7) -> np.ndarray:
        t = spread * self.normal()
        a, b = self.angle(), self.angle()
        ch, sh = math.cosh(t), math.sinh(t)
        return np.array(
            [[ch * np.exp(1j * a), sh * np.exp(1j * b)], [sh * np.exp(-1j * b), ch * np.exp(-1j * a)]]
        )

    def u11(self) -> np.ndarray:
        return np.exp(1j * self.angle()) * self.su11()

    # -- momenta ----------------------------------------------------------
    def _direction(self) -> np.ndarray:
        v = self.normal(3)
        return v / np.linalg.norm(v)

    def timelike(self, sign: int = 1) -> np.ndarray:
        m = 0.1 + abs(self.normal())
        p3 = self.normal(3)
        return np.concatenate([[sign * math.sqrt(m * m + p3 @ p3)], p3])

    def spacelike(self) -> np.ndarray:
        k = 0.1 + abs(self.normal())
        p0 = self.normal()
        return np.concatenate([[p0], math.sqrt(k * k + p0 * p0) * self._direction()])

    def null(self, sign: int = 1) -> np.ndarray:
        p3 = self.normal(3)
        return np.concatenate([[sign * np.linalg.norm(p3)], p3])

    def momentum(self, kind: str) -> np.ndarray:
        return {
            "timelike+": lambda: self.timelike(1),
            "timelike-": lambda: self.timelike(-1),
            "spacelike": self.spacelike,
            "null": lambda: self.null(self.sign()),
        }[kind]()

    def momentum_bispinor(self, kind: str) -> np.ndarray:
        return vector_to_bispinor(self.momentum(kind))

    # -- spinor data ------------------------------------------------------
    def matrix(self) -> np.ndarray:
        return self.complex_normal(4).reshape(2, 2)

    def pair(self, regime=Regime.REAL, sign: int = 1) -> SpinorPairMatrix:
        return SpinorPairMatrix(self.matrix(), sign, regime)

    def normalized_matrix(self) -> np.ndarray:
        a = self.matrix()
        return a * math.sqrt(2.0 / np.sum(np.abs(a) ** 2))

    def dyadic_matrix(self, bits: int = 8) -> np.ndarray:
        """Entries ``k / 2^bits`` with small integer ``k``; all later arithmetic is exact."""
        k = np.floor(self.uniform(8, -64.0, 64.0))
        return (k[0::2] + 1j * k[1::2]).reshape(2, 2) / 2.0**bits

    def null_twistor_spinors(self):
        """``(pi, omega)`` with ``pi . omega`` purely imaginary and non-zero."""
        pi, omega = self.complex_normal(2), self.complex_normal(2)
        po = contract(pi, omega)
        target = self.sign() * math.pi / 2
        omega = omega * np.exp(1j * (target - np.angle(po)))
        return pi, omega

    def rank_one(self):
        lam, mu = self.complex_normal(2), self.complex_normal(2)
        return np.outer(lam, mu), lam, mu
