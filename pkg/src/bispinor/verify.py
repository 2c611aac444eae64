"""Seeded invariant suites behind ``bispinor verify``.

Each property draws its own inputs from a ``Sampler`` seeded with
``(config.seed, property index)`` and reports the worst residual it saw.
Reports only use max/count reductions, so they are deterministic for a given
seed, configuration and suite.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import decomposition as dec
from . import entanglement as ent
from . import geometry as geo
from . import twistor as tw
from .config import Config
from .sampling import Sampler
from .spinor_core import (
    SIGMA_3,
    bispinor_to_vector,
    contract,
    det2,
    hermiticity_residual,
    mass_squared,
    mass_squared_sigma_bar,
    minkowski_square,
    vector_to_bispinor,
)

EPS = float(np.finfo(float).eps)
FD_SAMPLES = 100


@dataclass
class PropertyResult:
    name: str
    samples: int
    max_residual: float
    threshold: float
    passed: bool
    detail: str = ""


@dataclass
class _Prop:
    name: str
    threshold: float
    fn: Callable
    max_samples: int | None = None
    # "le": pass iff residual <= threshold; "range": residual in threshold tuple
    mode: str = "le"


def _max(values) -> float:
    vals = [float(v) for v in values]
    if any(math.isnan(v) for v in vals):
        return math.inf
    return max(vals) if vals else 0.0


def _rel(a, b) -> float:
    a, b = np.asarray(a), np.asarray(b)
    return float(np.max(np.abs(a - b)) / max(1.0, float(np.max(np.abs(b)))))


# -- core -------------------------------------------------------------------


def _core_det(rng: Sampler, cfg: Config, n: int):
    for _ in range(n):
        p = rng.normal(4)
        d = mass_squared(vector_to_bispinor(p))
        yield abs(d - minkowski_square(p)) / max(float(p @ p), 1e-300)


def _core_roundtrip(rng, cfg, n):
    for _ in range(n):
        p = rng.normal(4) + 1j * rng.normal(4)
        back = bispinor_to_vector(vector_to_bispinor(p))
        yield float(np.max(np.abs(back - p))) / (float(np.max(np.abs(p))) * EPS)


def _core_contract(rng, cfg, n):
    for _ in range(n):
        a, b, c = (rng.complex_normal(2) for _ in range(3))
        x, y = rng.complex_normal(2)
        scale = (np.linalg.norm(a) + np.linalg.norm(c)) * np.linalg.norm(b) * (1 + abs(x) + abs(y))
        yield max(
            abs(contract(a, b) + contract(b, a)),
            abs(contract(x * a + y * c, b) - x * contract(a, b) - y * contract(c, b)),
            abs(contract(a, a)),
        ) / scale


def _core_conj(rng, cfg, n):
    from .spinor_core import Spinor

    for _ in range(n):
        a = Spinor.from_array(rng.complex_normal(2))
        b = Spinor.from_array(rng.complex_normal(2))
        yield abs(contract(a.conj(), b.conj()) - np.conj(contract(a, b)))


def _core_sigma_bar(rng, cfg, n):
    for _ in range(n):
        p = rng.normal(4)
        m = vector_to_bispinor(p)
        yield abs(mass_squared_sigma_bar(m) - mass_squared(m)) / float(p @ p)


# -- decomposition ------------------------------------------------------------


def _roundtrip(kind):
    def fn(rng, cfg, n):
        for _ in range(n):
            p = rng.momentum_bispinor(kind)
            pair = dec.decompose_momentum(p, cfg.tol_abs)
            yield float(np.max(np.abs(dec.momentum_from_pair(pair) - p)))

    return fn


def _gauge_u2(rng, cfg, n):
    for _ in range(n):
        pair = rng.pair(dec.Regime.REAL, rng.sign())
        moved = dec.SpinorPairMatrix(rng.u2() @ pair.matrix, pair.sign, pair.regime)
        yield _rel(dec.momentum_from_pair(moved), dec.momentum_from_pair(pair))


def _gauge_u11(rng, cfg, n):
    for _ in range(n):
        pair = rng.pair(dec.Regime.IMAGINARY)
        v = rng.u11()
        moved = dec.SpinorPairMatrix(v @ pair.matrix, 1, pair.regime)
        yield _rel(dec.momentum_from_pair(moved), dec.momentum_from_pair(pair))


def _row_swap(rng, cfg, n):
    for _ in range(n):
        pair = rng.pair(dec.Regime.REAL, rng.sign())
        swapped = dec.SpinorPairMatrix(pair.matrix[::-1], pair.sign, pair.regime)
        yield _rel(dec.momentum_from_pair(swapped), dec.momentum_from_pair(pair))


def _sign_structure(rng, cfg, n):
    """0 when sign(det p) = relative sign and sign(tr p) = overall sign, else 1."""
    for _ in range(n):
        regime = dec.Regime.REAL if rng.uniform() < 0.5 else dec.Regime.IMAGINARY
        sign = rng.sign()
        pair = rng.pair(regime, sign)
        p = dec.momentum_from_pair(pair)
        rel = 1 if regime is dec.Regime.REAL else -1
        ok = np.sign(det2(p).real) == rel
        if regime is dec.Regime.REAL:
            ok = ok and np.sign(np.trace(p).real) == sign
        yield 0.0 if ok else 1.0


def _gauge_orbit(rng, cfg, n):
    for _ in range(n):
        regime = dec.Regime.REAL if rng.uniform() < 0.5 else dec.Regime.IMAGINARY
        pair = rng.pair(regime, rng.sign() if regime is dec.Regime.REAL else 1)
        p = dec.momentum_from_pair(pair)
        back = dec.decompose_momentum(p, cfg.tol_abs)
        yield max(
            _rel(dec.momentum_from_pair(back), p),
            abs(abs(dec.complex_mass(back)) - abs(dec.complex_mass(pair))) / max(1.0, abs(dec.complex_mass(pair))),
        )


def _random_coset_real(rng):
    return dec.CosetRepReal(complex(*rng.normal(2)), math.exp(0.7 * rng.normal()))


def _coset_real(rng, cfg, n):
    for _ in range(n):
        rep = _random_coset_real(rng)
        u0 = rng.su2()
        u, got = dec.gauge_fix_real(u0 @ rep.matrix(), cfg.tol_abs)
        unit = max(
            float(np.max(np.abs(u @ u.conj().T - np.eye(2)))),
            abs(det2(u) - 1),
        )
        yield max(abs(got.c - rep.c), abs(got.lam - rep.lam)) + (0 if unit <= 1e-10 else math.inf)


def _random_coset_imag(rng):
    return dec.CosetRepImag(rng.normal(), rng.uniform(None, 0.05, math.pi - 0.05), rng.angle())


def _coset_imag(rng, cfg, n):
    for _ in range(n):
        rep = _random_coset_imag(rng)
        v0 = rng.su11()
        v, got = dec.gauge_fix_imag(v0 @ rep.matrix(), cfg.tol_abs)
        pseudo = max(
            float(np.max(np.abs(v.conj().T @ SIGMA_3 @ v - SIGMA_3))),
            abs(det2(v) - 1),
        )
        dphi = abs((got.phi - rep.phi + math.pi) % (2 * math.pi) - math.pi)
        err = max(abs(got.zeta - rep.zeta), abs(got.theta - rep.theta), dphi)
        yield err + (0 if pseudo <= 1e-10 else math.inf)


def _random_hyperbolic(rng, regime=dec.Regime.REAL):
    return dec.HyperbolicCoords(
        0.2 + abs(rng.normal()),
        1.5 * abs(rng.normal()) if regime is dec.Regime.REAL else 1.5 * rng.normal(),
        rng.uniform(None, 0.05, math.pi - 0.05),
        rng.angle(),
        rng.sign() if regime is dec.Regime.REAL else 1,
        regime,
    )


def _coset_vs_hyperbolic(rng, cfg, n):
    for _ in range(n):
        h = _random_hyperbolic(rng)
        h = dec.HyperbolicCoords(h.mass_scale, h.zeta, h.theta, h.phi, 1)
        via_coset = dec.coset_to_momentum(dec.coset_from_hyperbolic(h), h.mass_scale)
        yield _rel(via_coset, dec.hyperbolic_to_momentum(h))


def _hyperbolic_roundtrip(rng, cfg, n):
    for _ in range(n):
        regime = dec.Regime.REAL if rng.uniform() < 0.5 else dec.Regime.IMAGINARY
        h = _random_hyperbolic(rng, regime)
        back = dec.momentum_to_hyperbolic(dec.hyperbolic_to_momentum(h), cfg.tol_abs)
        dphi = abs((back.phi - h.phi + math.pi) % (2 * math.pi) - math.pi)
        ok = back.regime is h.regime and back.energy_sign == h.energy_sign
        err = max(abs(back.mass_scale - h.mass_scale), abs(back.zeta - h.zeta), abs(back.theta - h.theta), dphi)
        yield err if ok else math.inf


def _alt_scaling(rng, cfg, n):
    """det F stays 1 while the momentum moves; residual is |det - 1| or inf if p unchanged."""
    for _ in range(n):
        rep = _random_coset_real(rng)
        kappa = math.exp(0.5 * rng.normal()) * (1.0 + 0.1 * rng.uniform())
        new = dec.rescale_coset_lambda(rep, kappa)
        moved = _rel(dec.coset_to_momentum(new, 1.0), dec.coset_to_momentum(rep, 1.0))
        yield abs(det2(new.matrix()) - 1) if moved > 1e-6 else math.inf


# -- geometry ---------------------------------------------------------------


def _fd_check(chart, metric, point_fn, tangent_dim, flat=geo.flat_metric):
    def fn(rng, cfg, n):
        for _ in range(n):
            x = point_fn(rng)
            v = rng.normal(tangent_dim)
            approx, scale = geo.pullback_fd(chart, x, v, flat, cfg.fd_step)
            yield geo.relative_error(approx, metric(x, v), scale)

    return fn


def _richardson(chart, point_fn):
    def fn(rng, cfg, n):
        for _ in range(n):
            yield geo.richardson_ratio(chart, point_fn(rng), cfg.richardson_step)

    return fn


def _real_point(rng):
    return np.array([0.3 + abs(rng.normal()), 0.1 + abs(rng.normal()), rng.uniform(None, 0.2, math.pi - 0.2), rng.angle()])


def _imag_point(rng):
    return np.array([0.3 + abs(rng.normal()), rng.normal(), rng.uniform(None, 0.2, math.pi - 0.2), rng.angle()])


def _s4_point(rng):
    return np.array([0.1 + abs(rng.normal()), rng.uniform(None, 0.2, math.pi - 0.2), rng.angle(), rng.angle()])


def _maurer_cartan(rng, cfg, n):
    for _ in range(n):
        rep = _random_coset_real(rng)
        dc, dlam = complex(*rng.normal(2)), rng.normal()
        closed = geo.coset_metric_closed(rep, dc, dlam)
        yield abs(geo.maurer_cartan_metric(rep, dc, dlam, cfg.fd_step) - closed) / closed


def _coset_coordinate(rng, cfg, n):
    for _ in range(n):
        x = _real_point(rng)[1:]
        v = rng.normal(3)
        d = geo.jacobian_fd(geo.coset_chart, x, cfg.fd_step) @ v
        rep = dec.coset_from_hyperbolic(dec.HyperbolicCoords(1.0, *x))
        mc = geo.maurer_cartan_metric(rep, complex(d[0], d[1]), d[2], cfg.fd_step)
        bracket = geo.coordinate_metric_real((1.0, *x), (0.0, *v))
        yield abs(mc - bracket) / bracket


def _quadratic(rng, cfg, n):
    metrics = [
        (geo.coordinate_metric_real, _real_point),
        (geo.coordinate_metric_imag, _imag_point),
        (geo.s4_conformal_metric, _s4_point),
    ]
    for _ in range(n):
        for metric, point in metrics:
            x, v = point(rng), rng.normal(4)
            g1 = metric(x, v)
            yield abs(metric(x, 2 * v) - 4 * g1) / max(1.0, abs(g1))


def _polarization(rng, cfg, n):
    metrics = [
        (geo.coordinate_metric_real, _real_point),
        (geo.coordinate_metric_imag, _imag_point),
        (geo.s4_conformal_metric, _s4_point),
    ]
    for _ in range(n):
        for metric, point in metrics:
            x = point(rng)
            u, v, w = rng.normal(4), rng.normal(4), rng.normal(4)
            a = rng.normal()

            def b(s, t):
                return (metric(x, s + t) - metric(x, s - t)) / 4

            scale = 1.0 + sum(abs(metric(x, y)) for y in (u, v, w)) * (1 + abs(a))
            yield max(abs(b(u, v) - b(v, u)), abs(b(a * u + w, v) - a * b(u, v) - b(w, v))) / scale


def _s4_constraint(rng, cfg, n):
    for _ in range(n):
        y = geo.s4_chart(_s4_point(rng))
        yield abs(float(y @ y) - 1)


# -- entanglement -----------------------------------------------------------


def _traces_exact(rng, cfg, n):
    """Dyadic inputs make every step exact, so the identity must hold bit for bit."""
    for _ in range(n):
        a = rng.dyadic_matrix()
        rho_a, rho_b = ent.reduced_density_matrices(a)
        p0 = bispinor_to_vector(dec.momentum_from_pair(dec.SpinorPairMatrix(a))).real[0]
        ta, tb = np.trace(rho_a).real, np.trace(rho_b).real
        yield 0.0 if ta == tb == p0 else 1.0


def _traces_float(rng, cfg, n):
    for _ in range(n):
        a = rng.matrix()
        rho_a, rho_b = ent.reduced_density_matrices(a)
        p0 = bispinor_to_vector(dec.momentum_from_pair(dec.SpinorPairMatrix(a))).real[0]
        ta, tb = np.trace(rho_a).real, np.trace(rho_b).real
        yield max(abs(ta - p0), abs(tb - p0)) / (p0 * EPS)


def _partial_trace_oracle(rng, cfg, n):
    for _ in range(n):
        a = rng.normalized_matrix()
        psi = ent.state_vector(a).reshape(2, 2)
        rho = np.einsum("ia,jb->iajb", psi, psi.conj())
        oracle_a = np.einsum("iaja->ij", rho)
        oracle_b = np.einsum("iaib->ab", rho)
        rho_a, rho_b = ent.reduced_density_matrices(a)
        yield max(_rel(rho_a, oracle_a), _rel(rho_b, oracle_b))


def _entropy_vs_spectrum(rng, cfg, n):
    for _ in range(n):
        a = rng.normalized_matrix()
        rho_a, _ = ent.reduced_density_matrices(a)
        yield abs(ent.von_neumann_entropy(min(ent.concurrence(a), 1.0)) - ent.entropy_from_spectrum(rho_a))


def _spectra_equal(rng, cfg, n):
    for _ in range(n):
        a = rng.normalized_matrix()
        rho_a, rho_b = ent.reduced_density_matrices(a)
        m = ent.concurrence(a)
        expected = np.array(ent.entropy_eigenvalues(min(m, 1.0)))[::-1]
        yield max(
            float(np.max(np.abs(np.linalg.eigvalsh(rho_a) - np.linalg.eigvalsh(rho_b)))),
            float(np.max(np.abs(np.linalg.eigvalsh(rho_a) - expected))),
        )


def _entropy_monotone(rng, cfg, n):
    for _ in range(n):
        m1, m2 = sorted(rng.uniform(2))
        if m1 == m2:
            continue
        yield 0.0 if ent.von_neumann_entropy(m1) < ent.von_neumann_entropy(m2) else 1.0


def _locc_invariance(rng, cfg, n):
    for _ in range(n):
        a = rng.normalized_matrix()
        b = ent.apply_local_unitaries(a, rng.su2(), rng.su2())
        ra, rb = ent.reduced_density_matrices(a)
        sa, sb = ent.reduced_density_matrices(b)
        yield max(
            abs(ent.concurrence(a) - ent.concurrence(b)),
            float(np.max(np.abs(np.linalg.eigvalsh(ra) - np.linalg.eigvalsh(sa)))),
            float(np.max(np.abs(np.linalg.eigvalsh(rb) - np.linalg.eigvalsh(sb)))),
        )


def _locc_kron_oracle(rng, cfg, n):
    for _ in range(n):
        a = rng.normalized_matrix()
        ua, ub = rng.su2(), rng.su2()
        moved = np.kron(ua, ub) @ ent.state_vector(a)
        yield _rel(ent.state_vector(ent.apply_local_unitaries(a, ua, ub)), moved)


def _rotation(rng, cfg, n):
    for _ in range(n):
        a = rng.normalized_matrix()
        ub = rng.su2()
        _, rho_b = ent.reduced_density_matrices(a)
        _, rho_b2 = ent.reduced_density_matrices(ent.apply_local_unitaries(a, np.eye(2), ub))
        p, q = bispinor_to_vector(2 * rho_b).real, bispinor_to_vector(2 * rho_b2).real
        r = ent.rotation_matrix(ub)
        yield max(abs(q[0] - p[0]), float(np.max(np.abs(q[1:] - r @ p[1:]))), float(np.max(np.abs(r.T @ r - np.eye(3)))))


def _hopf(rng, cfg, n):
    for _ in range(n):
        a = rng.normalized_matrix()
        h = ent.hopf_base_point(a)
        h2 = ent.hopf_base_point(rng.su2() @ a)
        yield max(h.constraint_residual(), float(np.max(np.abs(h.as_array() - h2.as_array()))))


def _mass_bound(rng, cfg, n):
    for _ in range(n):
        yield max(0.0, ent.concurrence(rng.normalized_matrix()) - 1.0)


def _concurrence_oracle(rng, cfg, n):
    for _ in range(n):
        a = rng.normalized_matrix()
        x = ent.state_vector(a)
        yield abs(ent.concurrence(a) - 2 * abs(x[0] * x[3] - x[1] * x[2]))


# -- twistor ----------------------------------------------------------------


def _family(rng, cfg, n):
    for _ in range(n):
        pi, omega = rng.null_twistor_spinors()
        z = tw.Twistor.from_spinors(pi, omega)
        fam = tw.solve_incidence_family(z, cfg.tol_rel)
        m2 = rng.uniform(None, -10.0, 10.0)
        p = fam(m2)
        yield max(
            hermiticity_residual(p),
            tw.incidence_residual(p, z),
            abs(mass_squared(p).real - m2) / max(1.0, abs(m2)),
        )


def _family_coefficients(rng, cfg, n):
    """For a Hermitian p incident with a null twistor: c3 = 0 and c1 = sign in the (pi0, omega0) basis."""
    for _ in range(n):
        pi, omega = rng.null_twistor_spinors()
        z = tw.Twistor.from_spinors(pi, omega)
        fam = tw.solve_incidence_family(z, cfg.tol_rel)
        p = fam(rng.uniform(None, -10.0, 10.0))
        c1, c2, c3, c4 = fam.coefficients(p)
        yield max(abs(c3), abs(c2), abs(c1 - fam.sign), abs(c4.imag))


def _hermitian_iff_null(rng, cfg, n):
    """Least-squares over Hermitian p: zero residual for null twistors, non-zero otherwise.

    Null draws report the residual itself; non-null draws report 0 when the
    residual is clearly non-zero and inf when it wrongly vanishes.
    """
    for _ in range(n):
        if rng.uniform() < 0.5:
            pi, omega = rng.null_twistor_spinors()
        else:
            pi, omega = rng.complex_normal(2), rng.complex_normal(2)
        scale = float(np.linalg.norm(pi) * np.linalg.norm(omega))
        norm = abs(contract(pi, omega).real)
        res = tw.min_hermitian_incidence_residual(tw.Twistor.from_spinors(pi, omega))
        if norm <= 1e-14 * scale:
            yield res / max(1.0, float(np.linalg.norm(pi)))
        elif norm > 1e-6 * scale:
            yield 0.0 if res > 1e-9 * norm / max(1.0, float(np.linalg.norm(omega))) else math.inf


def _degenerate(rng, cfg, n):
    for _ in range(n):
        omega = rng.complex_normal(2)
        c2 = complex(*rng.normal(2))
        c4 = rng.normal()
        p = tw.degenerate_momentum(omega, c2, c4)
        z = tw.projection_mu(p, tw.Twistor.from_spinors([0, 0], omega).omega_bar_upper)
        cls = tw.classify_degenerate(z, p, cfg.tol_abs)
        yield abs(mass_squared(p).real + abs(cls.k) ** 2)


def _c4_sweep(rng, cfg, n):
    for _ in range(n):
        omega = rng.complex_normal(2)
        c2 = complex(*rng.normal(2))
        dets = [mass_squared(tw.degenerate_momentum(omega, c2, c4)).real for c4 in np.linspace(-5, 5, 10)]
        yield (max(dets) - min(dets)) / max(1.0, max(abs(d) for d in dets))


def _projection_mu(rng, cfg, n):
    for _ in range(n):
        p = rng.matrix()
        ob = rng.complex_normal(2)
        yield tw.incidence_residual(p, tw.projection_mu(p, ob))


def _conifold(rng, cfg, n):
    for _ in range(n):
        a, _, _ = rng.rank_one()
        lam, mu = tw.conifold_factorize(a, cfg.tol_abs)
        lam2, mu2 = tw.canonicalize_factors(lam, mu)
        again = tw.conifold_factorize(np.outer(lam, mu), cfg.tol_abs)
        yield max(
            _rel(np.outer(lam, mu), a),
            float(np.max(np.abs(lam2 - lam))),
            float(np.max(np.abs(mu2 - mu))),
            _rel(again[0], lam),
            _rel(again[1], mu),
        )


def _czachor(rng, cfg, n):
    for _ in range(n):
        regime = dec.Regime.REAL if rng.uniform() < 0.5 else dec.Regime.IMAGINARY
        pair = rng.pair(regime, rng.sign())
        cp = tw.czachor_from_pair(pair)
        p = dec.momentum_from_pair(pair)
        c_form = tw.czachor_reconstruct_matrix(cp)
        # the C = diag(1, m) A / sqrt|det A| change of variables
        c = tw.czachor_matrix_from_pair(pair)
        ph, oh, m = tw.woodhouse_from_pair(pair)
        via_c = dec.momentum_from_pair(dec.SpinorPairMatrix(c, pair.sign, regime))
        outer_form = tw.czachor_reconstruct(tw.CzachorPair(ph, oh, cp.m2, pair.sign))
        rel_sign = 1 if regime is dec.Regime.REAL else -1
        yield max(
            _rel(tw.czachor_reconstruct(cp), p),
            _rel(c_form, p),
            _rel(via_c, outer_form),
            _rel(tw.woodhouse_reconstruct(ph, oh, m, pair.sign, rel_sign), p),
        )


def _generalized_incidence(rng, cfg, n):
    for _ in range(n):
        pi, omega = rng.complex_normal(2), rng.complex_normal(2)
        z = tw.Twistor.from_spinors(pi, omega)
        psi = math.atan2(contract(pi, omega).imag, contract(pi, omega).real)
        worst = 0.0
        for branch in (1, -1):
            zp = tw.phase_rotated(z, branch)
            fam = tw.solve_incidence_family(zp, cfg.tol_rel)
            phase = psi + branch * math.pi / 2
            p = fam(rng.uniform(None, -10.0, 10.0))
            worst = max(
                worst,
                tw.generalized_incidence_residual(p, z, phase) / max(1.0, float(np.max(np.abs(z.pi)))),
                abs(tw.generalized_norm(z, phase)) / max(1.0, abs(contract(pi, omega))),
            )
        yield worst


def _norm_sign_projective(rng, cfg, n):
    """Real rescaling preserves the sign class of the norm."""
    for _ in range(n):
        z = tw.Twistor(rng.complex_normal(4))
        s = rng.normal()
        n1, n2 = tw.twistor_norm(z), tw.twistor_norm(tw.Twistor(s * z.z))
        yield 0.0 if np.sign(n1) == np.sign(n2) and tw.projective_equal(z, tw.Twistor(s * z.z)) else 1.0


SUITES: dict[str, list[_Prop]] = {
    "core": [
        _Prop("det_equals_minkowski_square", 1e-12, _core_det),
        _Prop("vector_bispinor_roundtrip_ulps", 4.0, _core_roundtrip),
        _Prop("contract_bilinear_antisymmetric", 1e-12, _core_contract),
        _Prop("contract_commutes_with_conjugation", 1e-15, _core_conj),
        _Prop("sigma_bar_determinant_identity", 1e-12, _core_sigma_bar),
    ],
    "decomposition": [
        _Prop("roundtrip_timelike_plus", 1e-10, _roundtrip("timelike+")),
        _Prop("roundtrip_timelike_minus", 1e-10, _roundtrip("timelike-")),
        _Prop("roundtrip_spacelike", 1e-10, _roundtrip("spacelike")),
        _Prop("roundtrip_null", 1e-10, _roundtrip("null")),
        _Prop("gauge_invariance_u2", 1e-12, _gauge_u2),
        _Prop("gauge_invariance_u11", 1e-12, _gauge_u11),
        _Prop("row_swap_invariance", 1e-12, _row_swap),
        _Prop("sign_structure", 0.0, _sign_structure),
        _Prop("decompose_same_gauge_orbit", 1e-10, _gauge_orbit),
        _Prop("coset_gauge_fix_real", 1e-8, _coset_real),
        _Prop("coset_gauge_fix_imag", 1e-8, _coset_imag),
        _Prop("coset_vs_hyperbolic_paths", 1e-12, _coset_vs_hyperbolic),
        _Prop("hyperbolic_roundtrip", 1e-10, _hyperbolic_roundtrip),
        _Prop("lambda_rescaling_not_gauge", 1e-12, _alt_scaling),
    ],
    "geometry": [
        _Prop("metric_real_fd_pullback", 1e-6, _fd_check(geo.real_chart, geo.coordinate_metric_real, _real_point, 4), FD_SAMPLES),
        _Prop("metric_imag_fd_pullback", 1e-6, _fd_check(geo.imag_chart, geo.coordinate_metric_imag, _imag_point, 4), FD_SAMPLES),
        _Prop(
            "metric_s4_fd_pullback",
            1e-6,
            _fd_check(geo.s4_chart, geo.s4_conformal_metric, _s4_point, 4, geo.euclidean_metric),
            FD_SAMPLES,
        ),
        _Prop("richardson_ratio_real", (3.5, 4.5), _richardson(geo.real_chart, _real_point), FD_SAMPLES, "range"),
        _Prop("richardson_ratio_imag", (3.5, 4.5), _richardson(geo.imag_chart, _imag_point), FD_SAMPLES, "range"),
        _Prop("richardson_ratio_s4", (3.5, 4.5), _richardson(geo.s4_chart, _s4_point), FD_SAMPLES, "range"),
        _Prop("maurer_cartan_vs_closed_form", 1e-8, _maurer_cartan),
        _Prop("coset_metric_matches_coordinates", 1e-6, _coset_coordinate, FD_SAMPLES),
        _Prop("metrics_quadratic", 1e-12, _quadratic),
        _Prop("metrics_symmetric_bilinear", 1e-12, _polarization),
        _Prop("s4_unit_constraint", 1e-12, _s4_constraint),
    ],
    "entanglement": [
        _Prop("traces_equal_p0_exact", 0.0, _traces_exact),
        _Prop("traces_equal_p0_ulps", 4.0, _traces_float),
        _Prop("reduced_density_vs_partial_trace", 1e-12, _partial_trace_oracle),
        _Prop("entropy_formula_vs_spectrum", 1e-12, _entropy_vs_spectrum),
        _Prop("reduced_spectra_equal", 1e-12, _spectra_equal),
        _Prop("entropy_monotone", 0.0, _entropy_monotone),
        _Prop("locc_invariants", 1e-12, _locc_invariance),
        _Prop("local_unitaries_match_tensor_action", 1e-12, _locc_kron_oracle),
        _Prop("observer_b_rotates_momentum", 1e-12, _rotation),
        _Prop("hopf_base_on_unit_s4", 1e-12, _hopf),
        _Prop("mass_at_most_one", 0.0, _mass_bound),
        _Prop("concurrence_vs_amplitude_formula", 1e-12, _concurrence_oracle),
    ],
    "twistor": [
        _Prop("family_hermitian_incident_mass", 1e-12, _family),
        _Prop("family_coefficient_recovery", 1e-10, _family_coefficients),
        _Prop("hermitian_incident_iff_null_norm", 1e-12, _hermitian_iff_null),
        _Prop("degenerate_mass_equals_minus_k2", 1e-12, _degenerate),
        _Prop("degenerate_mass_independent_of_c4", 1e-12, _c4_sweep),
        _Prop("projection_mu_is_incident", 1e-12, _projection_mu),
        _Prop("conifold_factorization", 1e-10, _conifold),
        _Prop("czachor_forms_agree", 1e-12, _czachor),
        _Prop("generalized_incidence_phase", 1e-12, _generalized_incidence),
        _Prop("real_scaling_keeps_norm_sign", 0.0, _norm_sign_projective),
    ],
}
SUITE_NAMES = ["core", "decomposition", "geometry", "entanglement", "twistor"]


def _run_property(index: int, prop: _Prop, cfg: Config) -> PropertyResult:
    rng = Sampler(cfg.seed * 1000 + index)
    n = cfg.samples if prop.max_samples is None else min(cfg.samples, prop.max_samples)
    detail = ""
    try:
        values = list(prop.fn(rng, cfg, n))
    except Exception as exc:  # report, do not crash the suite
        values, detail = [math.inf], f"{type(exc).__name__}: {exc}"
    if prop.mode == "range":
        lo, hi = prop.threshold
        worst = max(values, key=lambda r: abs(r - (lo + hi) / 2))
        passed = all(lo <= r <= hi for r in values)
        return PropertyResult(prop.name, n, float(worst), [lo, hi], passed, detail)
    worst = _max(values)
    return PropertyResult(prop.name, n, worst, prop.threshold, worst <= prop.threshold, detail)


def run_suite(suite: str, cfg: Config) -> dict:
    names = SUITE_NAMES if suite == "all" else [suite]
    if any(name not in SUITES for name in names):
        raise ValueError(f"unknown suite {suite!r}")
    results = []
    index = 0
    for name in SUITE_NAMES:
        for prop in SUITES[name]:
            index += 1
            if name in names:
                r = _run_property(index, prop, cfg)
                results.append({"suite": name, **r.__dict__})
    return {
        "suite": suite,
        "config": cfg.to_dict(),
        "rng": "PCG64/SeedSequence, Box-Muller normals",
        "properties": results,
        "passed": all(r["passed"] for r in results),
    }
