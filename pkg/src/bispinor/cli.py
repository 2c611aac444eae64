"""``bispinor`` command-line front end.

Exit codes: 0 ok, 1 verification failure, 2 usage or malformed input,
3 domain error (for example a zero momentum or the zero twistor).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from . import __version__
from . import decomposition as dec
from . import entanglement as ent
from . import geometry as geo
from . import twistor as tw
from .config import CONFIG_ENV, Config, load_config
from .errors import DomainError, ZeroOmega, ZeroTwistor
from .serialize import dumps, parse_complex_array, parse_reals, to_jsonable
from .spinor_core import bispinor_to_vector, det2, vector_to_bispinor
from .verify import SUITE_NAMES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3

# flag -> Config field
_CONFIG_FLAGS = {
    "tol": "tol_abs",
    "tol_rel": "tol_rel",
    "fd_step": "fd_step",
    "richardson_step": "richardson_step",
    "samples": "samples",
    "seed": "seed",
}


class UsageError(Exception):
    pass


def _json_arg(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON: {exc.msg}") from exc


def _matrix_arg(text: str) -> np.ndarray:
    try:
        return parse_complex_array(_json_arg(text), (2, 2))
    except (ValueError, TypeError, KeyError) as exc:
        raise UsageError(f"expected a 2x2 complex matrix: {exc}") from exc


def _reals_arg(text: str, n: int) -> np.ndarray:
    try:
        return parse_reals(text, n)
    except (ValueError, TypeError, json.JSONDecodeError) as exc:
        raise UsageError(str(exc)) from exc


# -- commands ---------------------------------------------------------------


def cmd_decompose(args, cfg: Config) -> dict:
    p = _reals_arg(args.p, 4)
    pb = vector_to_bispinor(p)
    pair = dec.decompose_momentum(pb, cfg.tol_abs)
    mu = dec.complex_mass(pair)
    kind = dec.mass_regime(pb, cfg.tol_abs)
    report = {
        "p": p,
        "A": pair.matrix,
        "sign": pair.sign,
        "regime": pair.regime,
        "mass_regime": kind,
        "mu": mu,
        "mass": abs(mu),
        "reconstruction_residual": float(np.max(np.abs(dec.momentum_from_pair(pair) - pb))),
    }
    if kind == "null":
        report["pi"] = pair.matrix[0]
        report["omega"] = pair.matrix[1]
    else:
        _, a_prime = dec.normalize_sl2c(pair.matrix, cfg.tol_abs)
        if pair.regime is dec.Regime.REAL:
            u, rep = dec.gauge_fix_real(a_prime, cfg.tol_abs)
            report["coset"] = {"c": rep.c, "lam": rep.lam}
            report["gauge"] = u
        else:
            v, rep = dec.gauge_fix_imag(a_prime, cfg.tol_abs)
            report["coset"] = {"zeta": rep.zeta, "theta": rep.theta, "phi": rep.phi}
            report["gauge"] = v
        report["hyperbolic"] = dec.momentum_to_hyperbolic(p, cfg.tol_abs)
    if p[0] == 1.0 and pair.regime is dec.Regime.REAL:
        report["stratum"] = ent.classify_stratum(pair.matrix, cfg.tol_rel)
    return report


def cmd_reconstruct(args, cfg: Config) -> dict:
    a = _matrix_arg(args.A)
    regime = dec.Regime(args.regime)
    pair = dec.SpinorPairMatrix(a, args.sign, regime)
    p = dec.momentum_from_pair(pair)
    return {
        "A": a,
        "regime": regime,
        "sign": args.sign,
        "p_bispinor": p,
        "p": bispinor_to_vector(p).real,
        "det_p": det2(p).real,
        "mu": dec.complex_mass(pair),
    }


def cmd_entropy(args, cfg: Config) -> dict:
    if (args.m is None) == (args.A is None):
        raise UsageError("give exactly one of --m or --A")
    if args.A is not None:
        a = _matrix_arg(args.A)
        # |det A| can exceed 1 by an ulp on normalized input
        m = min(ent.concurrence(a, cfg.tol_rel), 1.0)
        report = {"A": a}
    else:
        m = float(args.m)
        report = {}
    entropy = ent.von_neumann_entropy(m)
    report.update({"m": m, "eigenvalues": list(ent.entropy_eigenvalues(m)), "entropy": entropy})
    return report


def _spectra(a) -> dict:
    rho_a, rho_b = ent.reduced_density_matrices(a)
    return {"rho_A": np.linalg.eigvalsh(rho_a), "rho_B": np.linalg.eigvalsh(rho_b)}


def cmd_locc(args, cfg: Config) -> dict:
    a = _matrix_arg(args.A)
    u_a = _matrix_arg(args.ua) if args.ua else np.eye(2, dtype=complex)
    u_b = _matrix_arg(args.ub) if args.ub else np.eye(2, dtype=complex)
    b = ent.apply_local_unitaries(a, u_a, u_b, cfg.tol_abs)
    return {
        "A": a,
        "A_transformed": b,
        "concurrence": ent.concurrence(a, cfg.tol_rel),
        "concurrence_transformed": ent.concurrence(b, cfg.tol_rel),
        "spectra": _spectra(a),
        "spectra_transformed": _spectra(b),
        "rotation_B": ent.rotation_matrix(u_b),
    }


def cmd_hopf(args, cfg: Config) -> dict:
    a = _matrix_arg(args.A)
    h = ent.hopf_base_point(a, cfg.tol_rel)
    return {
        "A": a,
        "base_point": h,
        "constraint_residual": h.constraint_residual(),
        "stratum": ent.classify_stratum(a, cfg.tol_rel),
    }


_METRICS = {
    "real": (geo.real_chart, geo.coordinate_metric_real, geo.flat_metric),
    "imag": (geo.imag_chart, geo.coordinate_metric_imag, geo.flat_metric),
    "s4": (geo.s4_chart, geo.s4_conformal_metric, geo.euclidean_metric),
}


def cmd_metric(args, cfg: Config) -> dict:
    x = _reals_arg(args.point, 4)
    v = _reals_arg(args.tangent, 4)
    chart, metric, flat = _METRICS[args.chart]
    closed = metric(x, v)
    fd, scale = geo.pullback_fd(chart, x, v, flat, cfg.fd_step)
    return {
        "chart": args.chart,
        "point": x,
        "tangent": v,
        "closed_form": closed,
        "finite_difference": fd,
        "relative_error": geo.relative_error(fd, closed, scale),
        "richardson_ratio": geo.richardson_ratio(chart, x, cfg.richardson_step),
    }


def cmd_twistor(args, cfg: Config) -> dict:
    r = _reals_arg(args.z, 8)
    z = tw.Twistor(r[0::2] + 1j * r[1::2])
    if not np.any(z.z):
        raise ZeroTwistor("the zero twistor is not a point of CP^3")
    po = tw.pi_dot_omega(z)
    report = {
        "Z": z.z,
        "pi_dot_omega": po,
        "norm": tw.twistor_norm(z),
        "domain": tw.norm_domain(z, cfg.tol_rel),
    }
    if abs(po) <= cfg.tol_abs * max(1.0, float(np.linalg.norm(z.pi) * np.linalg.norm(z.omega))):
        if args.p is not None:
            p = _matrix_arg(args.p)
        else:
            omega = z.omega
            w2 = float(np.vdot(omega, omega).real)
            if w2 == 0:
                raise ZeroOmega("omega = 0")
            # pi = k omega fixes c2 = -i conj(k); c4 = 0 gives the pure tachyon, k = 0 a null ray
            k = complex(np.vdot(omega, z.pi) / w2)
            p = tw.degenerate_momentum(omega, -1j * np.conj(k), 0.0 if k else 1.0)
        cls = tw.classify_degenerate(z, p, max(cfg.tol_abs, cfg.tol_rel))
        report["degenerate"] = {
            "case": cls.case,
            "k": cls.k,
            "m2": cls.m2,
            "c4": cls.c4,
            "lam": cls.lam,
            "p": p,
            "incidence_residual": tw.incidence_residual(p, z),
        }
        return report
    if report["domain"] is tw.NormDomain.NULL:
        fam = tw.solve_incidence_family(z, cfg.tol_rel)
        samples = []
        for m2 in args.m2:
            p = fam(m2)
            samples.append(
                {
                    "m2": m2,
                    "p": p,
                    "p_vector": bispinor_to_vector(p).real,
                    "det_p": det2(p).real,
                    "incidence_residual": tw.incidence_residual(p, z),
                    "coefficients": fam.coefficients(p),
                }
            )
        report["family"] = {"sign": fam.sign, "r": fam.r, "pi0": fam.pi0, "omega0": fam.omega0, "samples": samples}
    else:
        psi = math.atan2(po.imag, po.real)
        report["generalized_phases"] = [psi + math.pi / 2, psi - math.pi / 2]
    return report


def cmd_verify(args, cfg: Config) -> dict:
    return run_suite(args.suite, cfg)


# -- output -----------------------------------------------------------------


def _flatten(obj, prefix="", rows=None):
    rows = [] if rows is None else rows
    if isinstance(obj, dict):
        if set(obj) == {"re", "im"}:
            rows.append((prefix + ".re", obj["re"]))
            rows.append((prefix + ".im", obj["im"]))
            return rows
        for k in sorted(obj):
            _flatten(obj[k], f"{prefix}.{k}" if prefix else str(k), rows)
    elif isinstance(obj, list):
        for i, x in enumerate(obj):
            _flatten(x, f"{prefix}[{i}]", rows)
    else:
        rows.append((prefix, obj))
    return rows


def format_report(report: dict, fmt: str) -> str:
    if fmt == "json":
        return dumps(report) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if "properties" in report:
        cols = ["suite", "name", "samples", "max_residual", "threshold", "passed"]
        writer.writerow(cols)
        for p in to_jsonable(report["properties"]):
            thr = p["threshold"]
            writer.writerow([p["suite"], p["name"], p["samples"], repr(p["max_residual"]),
                             ";".join(map(repr, thr)) if isinstance(thr, list) else repr(thr), p["passed"]])
        return buf.getvalue()
    writer.writerow(["key", "value"])
    for key, value in _flatten(to_jsonable(report)):
        writer.writerow([key, repr(value) if isinstance(value, float) else value])
    return buf.getvalue()


# -- parser -----------------------------------------------------------------


def _common_flags() -> argparse.ArgumentParser:
    # SUPPRESS keeps a flag given before the subcommand from being reset after it
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("global options")
    g.add_argument("--tol", type=float, default=argparse.SUPPRESS, help="absolute tolerance (tol_abs, default 1e-10)")
    g.add_argument("--tol-rel", type=float, default=argparse.SUPPRESS, help="relative tolerance (tol_rel, default 1e-8)")
    g.add_argument("--fd-step", type=float, default=argparse.SUPPRESS, help="finite-difference step (fd_step, default 1e-5)")
    g.add_argument(
        "--richardson-step",
        type=float,
        default=argparse.SUPPRESS,
        help="base step of the Richardson ratio check (richardson_step, default 1e-2)",
    )
    g.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="PCG64 seed (seed, default 42)")
    g.add_argument("--samples", type=int, default=argparse.SUPPRESS, help="samples per property (samples, default 1000)")
    g.add_argument("--format", choices=["json", "csv"], default=argparse.SUPPRESS, help="output format (default json)")
    g.add_argument(
        "--config",
        default=argparse.SUPPRESS,
        help=f"JSON config file with any of the fields above; falls back to ${CONFIG_ENV}",
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(
        prog="bispinor",
        description="Spinor decompositions of four-momenta, their geometry, entanglement and twistor data.",
        parents=[common],
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("decompose", parents=[common], help="split a real 4-momentum into a spinor pair")
    p.add_argument("--p", required=True, help="p0,p1,p2,p3 as CSV or a JSON list")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("reconstruct", parents=[common], help="momentum from a spinor-pair matrix A")
    p.add_argument("--A", required=True, help='2x2 JSON matrix; entries real or {"re":..,"im":..}')
    p.add_argument("--sign", type=int, choices=[1, -1], default=1, help="overall sign s")
    p.add_argument("--regime", choices=[r.value for r in dec.Regime], default=dec.Regime.REAL.value)
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("entropy", parents=[common], help="entanglement entropy from a mass m or a matrix A")
    p.add_argument("--m", type=float, help="concurrence / mass in [0, 1]")
    p.add_argument("--A", help="normalized 2x2 JSON matrix")
    p.set_defaults(func=cmd_entropy)

    p = sub.add_parser("locc", parents=[common], help="apply local SU(2) x SU(2) unitaries")
    p.add_argument("--A", required=True, help="normalized 2x2 JSON matrix")
    p.add_argument("--ua", help="SU(2) matrix acting on the first qubit (default identity)")
    p.add_argument("--ub", help="SU(2) matrix acting on the second qubit (default identity)")
    p.set_defaults(func=cmd_locc)

    p = sub.add_parser("hopf", parents=[common], help="S^4 base point of a normalized state")
    p.add_argument("--A", required=True, help="normalized 2x2 JSON matrix")
    p.set_defaults(func=cmd_hopf)

    p = sub.add_parser("metric", parents=[common], help="closed-form metric against a finite-difference pullback")
    p.add_argument("--chart", choices=sorted(_METRICS), default="real")
    p.add_argument("--point", required=True, help="4 chart coordinates")
    p.add_argument("--tangent", required=True, help="4 tangent components")
    p.set_defaults(func=cmd_metric)

    p = sub.add_parser("twistor", parents=[common], help="norm, incidence family or degenerate classification")
    p.add_argument("--z", required=True, help="8 reals: Re Z0, Im Z0, ..., Re Z3, Im Z3")
    p.add_argument("--m2", type=float, nargs="+", default=[-1.0, 0.0, 1.0], help="mass-squared values to sample")
    p.add_argument("--p", help="momentum to classify when pi . omega = 0 (2x2 JSON matrix)")
    p.set_defaults(func=cmd_twistor)

    p = sub.add_parser("verify", parents=[common], help="run the seeded invariant suites")
    p.add_argument("--suite", choices=SUITE_NAMES + ["all"], default="all")
    p.set_defaults(func=cmd_verify)
    return parser


def resolve_config(args) -> Config:
    cfg = load_config(getattr(args, "config", None))
    overrides = {field: getattr(args, flag) for flag, field in _CONFIG_FLAGS.items() if hasattr(args, flag)}
    return cfg.updated(**overrides)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = getattr(args, "format", "json")
    try:
        cfg = resolve_config(args)
        report = args.func(args, cfg)
    except DomainError as exc:
        print(f"bispinor: domain error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (UsageError, ValueError, OSError) as exc:
        print(f"bispinor: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(format_report(report, fmt))
    if args.command == "verify" and not report["passed"]:
        return EXIT_FAIL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
