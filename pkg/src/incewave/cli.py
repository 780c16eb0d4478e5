"""Command-line front end.

    ince-wave <params|eigen|poly|spectrum|wave|momenta|figures|verify>
              [flags] [--config file.json] [--out dir] [--format csv|json]

JSON carries configuration and reports, CSV carries numeric grids.  CSV
files start with '#'-prefixed metadata comments, then a header row;
floats are written in shortest round-trip form, so identical inputs
give byte-identical output.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np

from . import __version__
from .core import (
    Family,
    InceProblem,
    LaserPlasmaConfig,
    derive_params,
    family_from_name,
    transverse_momentum,
)
from .ince import evaluate, solve_family
from .physics import MassShell, momentum_spectrum, wavefunction
from .specialfns import normalized_envelope_sq
from . import verify as verify_mod

N_CAP_DEFAULT = 200


def _fmt(value) -> str:
    """Shortest round-trip text for a float; plain str otherwise."""
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, (np.floating,)):
        return repr(float(value))
    return str(value)


def _write_text(text: str, out_dir: str | None, filename: str) -> None:
    if out_dir is None:
        sys.stdout.write(text)
    else:
        path = Path(out_dir)
        path.mkdir(parents=True, exist_ok=True)
        (path / filename).write_text(text)


def _csv_text(meta: dict, header: list[str], rows) -> str:
    lines = [f"# incewave {__version__}"]
    if meta:
        lines.append("# " + " ".join(f"{k}={_fmt(v)}" for k, v in meta.items()))
    lines.append(",".join(header))
    for row in rows:
        lines.append(",".join(_fmt(v) for v in row))
    return "\n".join(lines) + "\n"


def _json_text(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _emit_table(args, meta: dict, header: list[str], rows, stem: str) -> None:
    if args.format == "json":
        payload = {
            "meta": {**meta, "version": __version__},
            "columns": header,
            "rows": [list(map(_maybe_float, row)) for row in rows],
        }
        _write_text(_json_text(payload), args.out, f"{stem}.json")
    else:
        _write_text(_csv_text(meta, header, rows), args.out, f"{stem}.csv")


def _maybe_float(v):
    if isinstance(v, (np.floating, np.integer)):
        return v.item()
    return v


def _config_from_args(args) -> LaserPlasmaConfig:
    return LaserPlasmaConfig(
        photon_energy_ev=args.photon_energy_ev,
        intensity_w_cm2=args.intensity_w_cm2,
        electron_density_cm3=args.electron_density_cm3,
        plasmon_energy_ev=args.plasmon_energy_ev,
    )


def _check_n(n: int, cap: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > cap:
        raise ValueError(f"n={n} exceeds the cap {cap} (raise with --n-cap)")
    return n


def _family(args) -> Family:
    return family_from_name(args.family)


# ----------------------------------------------------------------- commands


def cmd_params(args) -> int:
    derived = derive_params(_config_from_args(args))
    payload = dataclasses.asdict(derived)
    payload["lambda_p_m"] = derived.lambda_p_m
    payload["version"] = __version__
    _write_text(_json_text(payload), args.out, "params.json")
    return 0


def cmd_eigen(args) -> int:
    family = _family(args)
    n = _check_n(args.n, args.n_cap)
    solutions = solve_family(family, n, args.a)
    meta = {"family": family.value, "n": n, "q": family.q_from_n(n), "a": args.a}
    rows = [(s.k, s.eta) for s in solutions]
    _emit_table(args, meta, ["k", "eta"], rows, f"eigen_{family.value}_n{n}")
    return 0


def cmd_poly(args) -> int:
    family = _family(args)
    n = _check_n(args.n, args.n_cap)
    solutions = solve_family(family, n, args.a)
    meta = {"family": family.value, "n": n, "q": family.q_from_n(n), "a": args.a}
    rows = []
    for s in solutions:
        for r, (m, c) in enumerate(zip(s.harmonics(), s.coeffs)):
            rows.append((s.k, s.eta, r, int(m), c))
    _emit_table(
        args, meta, ["k", "eta", "r", "harmonic", "coeff"], rows,
        f"poly_{family.value}_n{n}",
    )
    return 0


def cmd_spectrum(args) -> int:
    family = _family(args)
    n = _check_n(args.n, args.n_cap)
    solutions = solve_family(family, n, args.a)
    meta = {"family": family.value, "n": n, "q": family.q_from_n(n), "a": args.a}
    rows = []
    for s in solutions:
        for r, c in enumerate(s.coeffs):
            rows.append((s.k, s.eta, r, c * c))
    _emit_table(
        args, meta, ["k", "eta", "r", "coeff_sq"], rows,
        f"spectrum_{family.value}_n{n}",
    )
    return 0


def cmd_momenta(args) -> int:
    family = _family(args)
    n = _check_n(args.n, args.n_cap)
    derived = derive_params(_config_from_args(args))
    problem = InceProblem.from_n(family, n, derived.a)
    shell = MassShell(args.mass_shell)
    p_z = args.p_z_kp * derived.kp
    solutions = solve_family(family, n, derived.a)
    meta = {
        "family": family.value,
        "n": n,
        "q": problem.q,
        "a": derived.a,
        "p_x": transverse_momentum(problem, derived),
        "p_z": p_z,
        "mass_shell": shell.value,
    }
    rows = []
    for s in solutions:
        plus, minus = momentum_spectrum(s.eta, problem, derived, p_z, shell)
        rows.append(
            (
                s.k,
                s.eta,
                "" if plus.evanescent else plus.p_hat,
                "" if minus.evanescent else minus.p_hat,
                "" if not plus.evanescent else plus.p_hat_imag,
                "" if plus.gap_state else plus.pxi_ratio,
                "" if plus.p0 is None else plus.p0,
                "" if plus.p_y is None else plus.p_y,
                "" if minus.p0 is None else minus.p0,
                "" if minus.p_y is None else minus.p_y,
                int(plus.evanescent),
                int(plus.gap_state),
            )
        )
    header = [
        "k", "eta", "p_hat_plus", "p_hat_minus", "p_hat_imag",
        "pxi_ratio", "p0_plus", "p_y_plus", "p0_minus", "p_y_minus",
        "evanescent", "gap_state",
    ]
    _emit_table(args, meta, header, rows, f"momenta_{family.value}_n{n}")
    return 0


def cmd_wave(args) -> int:
    family = _family(args)
    n = _check_n(args.n, args.n_cap)
    derived = derive_params(_config_from_args(args))
    problem = InceProblem.from_n(family, n, derived.a)
    shell = MassShell(args.mass_shell)
    p_z = args.p_z_kp * derived.kp
    solutions = solve_family(family, n, derived.a)
    by_k = {s.k: s for s in solutions}
    if args.k not in by_k:
        raise ValueError(f"k={args.k} not available; solutions have k={sorted(by_k)}")
    sol = by_k[args.k]
    plus, _ = momentum_spectrum(sol.eta, problem, derived, p_z, shell)
    xi = np.linspace(args.xi_min, args.xi_max, args.points)
    # worldline through the origin: x = y = x3 = 0, t = xi/omega0
    t = xi / derived.omega0
    values = wavefunction(
        sol, plus, derived, t, 0.0, 0.0, 0.0, allow_evanescent=args.allow_evanescent
    )
    values = np.asarray(values, dtype=complex)
    meta = {
        "family": family.value, "n": n, "q": problem.q, "k": sol.k,
        "a": derived.a, "eta": sol.eta, "mass_shell": shell.value,
        "evanescent": int(plus.evanescent),
    }
    rows = [
        (x, v.real, v.imag, abs(v)) for x, v in zip(xi, values)
    ]
    _emit_table(args, meta, ["xi", "re", "im", "abs"], rows,
                f"wave_{family.value}_n{n}_k{sol.k}")
    return 0


# ------------------------------------------------------------------ figures

FIG_K_SELECTION = (0, 9, 15, 20)
FIG_GRID_POINTS = 1001


def _fig1(args) -> list[tuple[str, str]]:
    files = []
    xi = np.linspace(-2 * np.pi, 2 * np.pi, FIG_GRID_POINTS)
    for a in (4.0, 14.0):
        env = normalized_envelope_sq(a, xi)
        text = _csv_text(
            {"a": a, "quantity": "envelope_sq_normalized"},
            ["xi", "envelope_sq_normalized"],
            zip(xi, env),
        )
        files.append((f"fig1_a{int(a)}.csv", text))
    return files


def _fig2(args) -> list[tuple[str, str]]:
    def one(family: Family):
        n = max(args.n, family.min_n())
        sols = solve_family(family, n, args.a)
        text = _csv_text(
            {"family": family.value, "n": n, "q": family.q_from_n(n), "a": args.a},
            ["k", "eta"],
            [(s.k, s.eta) for s in sols],
        )
        return (f"fig2_{family.value}.csv", text)

    with ThreadPoolExecutor(max_workers=args.jobs) as pool:
        return list(pool.map(one, Family))


def _fig34(args, selected: bool) -> list[tuple[str, str]]:
    fig = "fig3" if selected else "fig4"

    def one(family: Family):
        n = max(args.n, family.min_n())
        sols = solve_family(family, n, args.a)
        if selected:
            wanted = {1 if family is Family.EVEN_SINE and k == 0 else k
                      for k in FIG_K_SELECTION}
            sols = [s for s in sols if s.k in wanted]
        rows = []
        for s in sols:
            for r, c in enumerate(s.coeffs):
                rows.append((s.k, s.eta, r, c * c))
        text = _csv_text(
            {"family": family.value, "n": n, "q": family.q_from_n(n), "a": args.a},
            ["k", "eta", "r", "coeff_sq"],
            rows,
        )
        return (f"{fig}_{family.value}.csv", text)

    families = (Family.EVEN_COSINE,) if selected else tuple(Family)
    with ThreadPoolExecutor(max_workers=args.jobs) as pool:
        return list(pool.map(one, families))


def _fig56(args, family: Family) -> list[tuple[str, str]]:
    fig = "fig5" if family is Family.EVEN_COSINE else "fig6"
    n = max(args.n, family.min_n())
    sols = {s.k: s for s in solve_family(family, n, args.a)}
    ks = [1 if family is Family.EVEN_SINE and k == 0 else k for k in FIG_K_SELECTION]
    xi = np.linspace(-2 * np.pi, 2 * np.pi, FIG_GRID_POINTS)
    columns = [evaluate(sols[k], xi) for k in ks]
    rows = [tuple([x] + [col[i] for col in columns]) for i, x in enumerate(xi)]
    text = _csv_text(
        {"family": family.value, "n": n, "q": family.q_from_n(n), "a": args.a,
         "k_values": "|".join(str(k) for k in ks)},
        ["xi"] + [f"phi_k{k}" for k in ks],
        rows,
    )
    return [(f"{fig}_{family.value}.csv", text)]


def cmd_figures(args) -> int:
    if args.out is None:
        raise ValueError("figures requires --out DIR")
    which = args.which
    known = {"1", "2", "3", "4", "5", "6", "all"}
    if which not in known:
        raise ValueError(f"unknown figure id {which!r}; expected 1..6 or all")
    wanted = {"1", "2", "3", "4", "5", "6"} if which == "all" else {which}
    files: list[tuple[str, str]] = []
    if "1" in wanted:
        files += _fig1(args)
    if "2" in wanted:
        files += _fig2(args)
    if "3" in wanted:
        files += _fig34(args, selected=True)
    if "4" in wanted:
        files += _fig34(args, selected=False)
    if "5" in wanted:
        files += _fig56(args, Family.EVEN_COSINE)
    if "6" in wanted:
        files += _fig56(args, Family.EVEN_SINE)
    for name, text in files:
        _write_text(text, args.out, name)
    manifest = {"version": __version__, "files": sorted(name for name, _ in files)}
    _write_text(_json_text(manifest), args.out, "figures_manifest.json")
    return 0


def cmd_verify(args) -> int:
    families = tuple(family_from_name(f) for f in args.families.split(",")) \
        if args.families else tuple(Family)
    a_values = tuple(float(x) for x in args.a_values.split(",")) \
        if args.a_values else verify_mod.DEFAULT_A_VALUES
    n_max = args.n_max if args.n_max is not None else verify_mod.DEFAULT_N_MAX
    if args.n is not None:
        n_max = args.n
    report = verify_mod.run_all(
        families=families,
        n_max=n_max,
        a_values=a_values,
        eta_perturbation=args.inject_eta_perturbation,
    )
    report["version"] = __version__
    _write_text(_json_text(report), args.out, "verify.json")
    for check in report["checks"]:
        status = "pass" if check["passed"] else "FAIL"
        sys.stderr.write(f"[{status}] {check['name']}\n")
    return 0 if report["passed"] else 1


# -------------------------------------------------------------------- main

# Defaults applied after merging the JSON config, so that file values
# override these but explicit flags override everything.
_DEFAULTS = {
    "format": "csv",
    "a": 14.0,
    "jobs": 1,
    "n_cap": N_CAP_DEFAULT,
    "p_z_kp": 0.0,
    "mass_shell": "free",
    "xi_min": -2 * math.pi,
    "xi_max": 2 * math.pi,
    "points": FIG_GRID_POINTS,
    "intensity_w_cm2": 0.0,
}
_FIG_DEFAULT_N = 20


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="JSON file with default values for any flag")
    p.add_argument("--out", default=None, help="output directory (default: stdout)")
    p.add_argument("--format", choices=["csv", "json"], default=None)
    p.add_argument("--jobs", type=int, default=None,
                   help="parallel workers for independent computations")
    p.add_argument("--n-cap", type=int, default=None,
                   help=f"largest accepted n (default {N_CAP_DEFAULT})")


def _add_physics(p: argparse.ArgumentParser) -> None:
    p.add_argument("--photon-energy-ev", type=float, default=None)
    p.add_argument("--intensity-w-cm2", type=float, default=None)
    p.add_argument("--plasmon-energy-ev", type=float, default=None)
    p.add_argument("--electron-density-cm3", type=float, default=None)


def _add_problem(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", default=None,
                   help="even_cosine | even_sine | odd_cosine | odd_sine")
    p.add_argument("--n", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ince-wave",
        description="Polynomial eigenstates of a charged particle in a "
                    "plane wave propagating in an underdense medium",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", help="derived laser/plasma parameters")
    _add_common(p)
    _add_physics(p)
    p.set_defaults(func=cmd_params)

    for name, func, needs_a in (
        ("eigen", cmd_eigen, True),
        ("poly", cmd_poly, True),
        ("spectrum", cmd_spectrum, True),
    ):
        p = sub.add_parser(name, help=f"{name} table for one family")
        _add_common(p)
        _add_problem(p)
        p.add_argument("--a", type=float, default=None)
        p.set_defaults(func=func)

    p = sub.add_parser("momenta", help="quantized momentum parameters")
    _add_common(p)
    _add_physics(p)
    _add_problem(p)
    p.add_argument("--p-z-kp", type=float, default=None,
                   help="p_z in units of kp (default 0)")
    p.add_argument("--mass-shell", choices=["free", "dressed"], default=None)
    p.set_defaults(func=cmd_momenta)

    p = sub.add_parser("wave", help="sample one wave function along xi")
    _add_common(p)
    _add_physics(p)
    _add_problem(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--p-z-kp", type=float, default=None)
    p.add_argument("--mass-shell", choices=["free", "dressed"], default=None)
    p.add_argument("--xi-min", type=float, default=None)
    p.add_argument("--xi-max", type=float, default=None)
    p.add_argument("--points", type=int, default=None)
    p.add_argument("--allow-evanescent", action="store_true")
    p.set_defaults(func=cmd_wave)

    p = sub.add_parser("figures", help="write figure-data CSV files")
    _add_common(p)
    p.add_argument("--which", default="all", help="1..6 or all")
    p.add_argument("--a", type=float, default=None)
    p.add_argument("--n", type=int, default=None)
    p.set_defaults(func=cmd_figures, fig=True)

    p = sub.add_parser("verify", help="run the self-check suites")
    _add_common(p)
    p.add_argument("--families", default=None, help="comma-separated family names")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--a-values", default=None, help="comma-separated a values")
    p.add_argument("--inject-eta-perturbation", type=float, default=0.0,
                   help="testing hook: offset every eigenvalue")
    p.set_defaults(func=cmd_verify)

    return parser


def _merge_config(args: argparse.Namespace) -> None:
    file_values = {}
    if getattr(args, "config", None):
        with open(args.config) as fh:
            file_values = json.load(fh)
        if not isinstance(file_values, dict):
            raise ValueError("config file must hold a JSON object")
    for key, value in file_values.items():
        dest = key.replace("-", "_")
        if getattr(args, dest, None) is None:
            setattr(args, dest, value)
    for dest, value in _DEFAULTS.items():
        if getattr(args, dest, None) is None and hasattr(args, dest):
            setattr(args, dest, value)
    if getattr(args, "fig", False) and args.n is None:
        args.n = _FIG_DEFAULT_N


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _merge_config(args)
        if hasattr(args, "family") and args.family is None:
            raise ValueError("--family is required")
        if hasattr(args, "family") and getattr(args, "n", None) is None:
            raise ValueError("--n is required")
        return args.func(args)
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
