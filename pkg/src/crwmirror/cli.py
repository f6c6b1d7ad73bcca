"""Command line interface emitting CSV/JSON tables over detuning grids.

Subcommands and their column contracts (order is contractual, the figure
renderer depends on it):

  spectrum         delta,E,k,re_kprime,im_kprime,T,R,region
  spectrum-approx  delta,T_exact,T_incoherent,region
  bandwidth        value,width_L,lo1,hi1,lo2,hi2
  bands            n,p,e_minus,e_plus,vg_minus,vg_plus,e_free,vg_free
  convergence      delta,na,T
  disorder         delta,mean_T,std_T,samples   (--single: delta,T)
  loss             delta,T_L,R_L,deficit
  validate         text report on stdout

Grids are uniform in the detuning delta = E - Omega_a, inclusive of both
endpoints. Every output starts with a metadata block (comment lines in CSV,
a "meta" object in JSON) recording the tool version and all parameters, so
the file can be regenerated exactly. Exit codes: 0 success, 2 configuration
error, 3 numerical failure, 4 validation failure.
"""

import argparse
import json
import sys

import numpy as np

from . import __version__
from .bands import (band_edges, free_group_velocity, group_velocity,
                    interaction_levels, stopped_light_region, width_sweep)
from .core import (BandEdgeError, EnergyRegion, ModelParams, OutOfBandError,
                   classify_energy, dispersion, incident_momentum)
from .disorder import DisorderSpec, ensemble_spectrum, sample_realization
from .lattice import (SingularSystemError, clean_realization,
                      diagonalize_interaction, solve_scattering)
from .loss import LossParams, lossy_reflection, lossy_transmission
from .scattering import incoherent_transmission, transmission
from .tables import Table, write_csv, write_json

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERIC = 3
EXIT_VALIDATION = 4


class ConfigError(ValueError):
    pass


def _f17(value) -> str:
    return format(float(value), ".17g")


def _build_parser() -> argparse.ArgumentParser:
    model = argparse.ArgumentParser(add_help=False)
    model.add_argument("--config", metavar="FILE",
                       help="flat JSON file providing defaults for any flag "
                            "of this subcommand (explicit flags win)")
    model.add_argument("--omega", type=float, default=5.0,
                       help="cavity frequency [g] (default 5)")
    model.add_argument("--Omega", type=float, default=6.0,
                       help="atomic level spacing [g] (default 6)")
    model.add_argument("--V", type=float, default=-1.0,
                       help="nearest-neighbor hopping [g] (default -1)")
    model.add_argument("--g", type=float, default=1.0,
                       help="atom-cavity coupling, the energy unit (default 1)")
    model.add_argument("--na", type=int, default=1,
                       help="number of doped cavities (default 1)")

    out = argparse.ArgumentParser(add_help=False)
    out.add_argument("--out", default="-",
                     help="output path, '-' for stdout (default)")
    out.add_argument("--format", choices=("csv", "json"), default="csv",
                     help="output format (default csv)")

    grid = argparse.ArgumentParser(add_help=False)
    grid.add_argument("--delta-min", type=float, default=-2.99,
                      help="grid start, detuning units [g] (default -2.99)")
    grid.add_argument("--delta-max", type=float, default=0.99,
                      help="grid end (default 0.99)")
    grid.add_argument("--steps", type=int, default=201,
                      help="grid points, endpoints included (default 201)")

    ap = argparse.ArgumentParser(
        prog="crwmirror",
        description="single-photon transport through an atom-doped "
                    "coupled-resonator waveguide (energies in units of g)")
    ap.add_argument("--version", action="version",
                    version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True, metavar="command")

    sp = sub.add_parser("spectrum", parents=[model, out, grid],
                        help="transmission/reflection over a detuning grid")
    sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser("spectrum-approx", parents=[model, out, grid],
                        help="exact vs incoherent-product transmission")
    sp.set_defaults(func=cmd_spectrum_approx)

    sp = sub.add_parser("bandwidth", parents=[model, out],
                        help="perfect-reflection width against one parameter")
    sp.add_argument("--axis", required=True,
                    choices=("V", "g", "Omega", "omega"),
                    help="parameter to sweep")
    sp.add_argument("--min", type=float, required=True, dest="axis_min",
                    help="sweep start")
    sp.add_argument("--max", type=float, required=True, dest="axis_max",
                    help="sweep end")
    sp.add_argument("--steps", type=int, default=201,
                    help="sweep points (default 201)")
    sp.set_defaults(func=cmd_bandwidth)

    sp = sub.add_parser("bands", parents=[model, out],
                        help="interaction-region levels and group velocities")
    sp.set_defaults(func=cmd_bands)

    sp = sub.add_parser("convergence", parents=[model, out],
                        help="transmission against atom count")
    sp.add_argument("--deltas", required=True,
                    help="comma-separated detunings [g]")
    sp.add_argument("--na-min", type=int, default=1, help="first atom count")
    sp.add_argument("--na-max", type=int, default=100, help="last atom count")
    sp.set_defaults(func=cmd_convergence)

    sp = sub.add_parser("disorder", parents=[model, out, grid],
                        help="ensemble-averaged spectra over random segments")
    sp.add_argument("--dist", choices=("uniform", "gauss"), default="uniform",
                    help="disorder distribution (default uniform)")
    sp.add_argument("--width-frac", type=float, default=0.2,
                    help="uniform relative half-width (default 0.2)")
    sp.add_argument("--sigma-omega", type=float, default=0.0,
                    help="gaussian std of site frequencies, absolute [g]")
    sp.add_argument("--sigma-v", type=float, default=0.0,
                    help="gaussian std of hoppings, absolute [g]")
    sp.add_argument("--samples", type=int, default=1000,
                    help="ensemble size (default 1000)")
    sp.add_argument("--seed", type=int, default=0,
                    help="reproducibility seed (default 0)")
    sp.add_argument("--single", action="store_true",
                    help="emit one seeded realization instead of the ensemble")
    sp.set_defaults(func=cmd_disorder)

    sp = sub.add_parser("loss", parents=[model, out, grid],
                        help="lossy transmission/reflection and current deficit")
    sp.add_argument("--gamma-a", type=float, default=0.0,
                    help="atomic decay rate [g] (default 0)")
    sp.add_argument("--gamma-c", type=float, default=0.0,
                    help="cavity loss rate [g] (default 0)")
    sp.set_defaults(func=cmd_loss)

    sp = sub.add_parser("validate", parents=[model, grid],
                        help="cross-check closed forms against direct solves")
    sp.add_argument("--self-test", action="store_true",
                    help="corrupt one hopping on purpose; the run must FAIL")
    sp.set_defaults(func=cmd_validate)
    return ap


def _apply_config(args: argparse.Namespace, argv: list) -> argparse.Namespace:
    """Overlay --config JSON under explicitly given flags."""
    try:
        with open(args.config) as fh:
            loaded = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}")
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}")
    if not isinstance(loaded, dict):
        raise ConfigError("config must be a flat JSON object")

    known = vars(args)
    for raw_key, value in loaded.items():
        key = raw_key.replace("-", "_")
        if key in ("config", "command", "func") or key not in known:
            raise ConfigError(f"unknown config key: {raw_key}")
        flag = "--" + raw_key.replace("_", "-")
        explicit = any(tok == flag or tok.startswith(flag + "=")
                       for tok in argv)
        if explicit:
            continue
        current = known[key]
        try:
            if isinstance(current, bool) or isinstance(value, bool):
                if not isinstance(value, bool):
                    raise ValueError("expected true/false")
                coerced = value
            elif isinstance(current, int) and not isinstance(current, bool):
                coerced = int(value)
            elif isinstance(current, float):
                coerced = float(value)
            else:
                coerced = str(value)
        except (TypeError, ValueError):
            raise ConfigError(f"config key {raw_key}: bad value {value!r}")
        setattr(args, key, coerced)
    return args


def _params(args) -> ModelParams:
    try:
        return ModelParams(omega=args.omega, Omega_a=args.Omega, V=args.V,
                           g=args.g, n_atoms=args.na)
    except ValueError as exc:
        raise ConfigError(str(exc))


def _grid(args) -> np.ndarray:
    if args.steps < 2:
        raise ConfigError("steps must be at least 2")
    if not args.delta_min < args.delta_max:
        raise ConfigError("delta-min must lie below delta-max")
    return np.linspace(args.delta_min, args.delta_max, args.steps)


def _inband_grid(args, p: ModelParams) -> np.ndarray:
    grid = _grid(args)
    for d in (float(grid[0]), float(grid[-1])):
        try:
            incident_momentum(p.Omega_a + d, p)
        except (OutOfBandError, BandEdgeError):
            raise ConfigError(
                f"delta={d!r} is not strictly inside the propagating band "
                f"[{p.band_min - p.Omega_a!r}, {p.band_max - p.Omega_a!r}]; "
                "this table has no region column, pick an in-band grid")
    return grid


def _meta(args, p: ModelParams) -> dict:
    return {
        "tool": f"crwmirror {__version__}",
        "command": args.command,
        "omega": _f17(p.omega),
        "Omega": _f17(p.Omega_a),
        "V": _f17(p.V),
        "g": _f17(p.g),
        "na": str(p.n_atoms),
    }


def _grid_meta(args) -> dict:
    return {"delta_min": _f17(args.delta_min),
            "delta_max": _f17(args.delta_max),
            "steps": str(args.steps)}


def _emit(table: Table, args) -> int:
    writer = write_csv if args.format == "csv" else write_json
    if args.out == "-":
        writer(table, sys.stdout)
    else:
        with open(args.out, "w", newline="") as fh:
            writer(table, fh)
    return EXIT_OK


def cmd_spectrum(args) -> int:
    p = _params(args)
    grid = _grid(args)
    rows = []
    for d in grid:
        d = float(d)
        e = p.Omega_a + d
        region = classify_energy(e, p)
        if region in (EnergyRegion.OUTSIDE_BAND, EnergyRegion.BAND_EDGE):
            rows.append((d, e, None, None, None, None, None, region.value))
            continue
        res = transmission(e, p)
        re_kp = None if res.k_prime is None else res.k_prime.value.real
        im_kp = None if res.k_prime is None else res.k_prime.value.imag
        rows.append((d, e, abs(res.k), re_kp, im_kp, res.T, res.R,
                     region.value))
    meta = _meta(args, p) | _grid_meta(args)
    cols = ("delta", "E", "k", "re_kprime", "im_kprime", "T", "R", "region")
    return _emit(Table(cols, rows, meta), args)


def cmd_spectrum_approx(args) -> int:
    p = _params(args)
    grid = _grid(args)
    rows = []
    for d in grid:
        d = float(d)
        e = p.Omega_a + d
        region = classify_energy(e, p)
        if region in (EnergyRegion.OUTSIDE_BAND, EnergyRegion.BAND_EDGE):
            rows.append((d, None, None, region.value))
            continue
        rows.append((d, transmission(e, p).T, incoherent_transmission(e, p),
                     region.value))
    meta = _meta(args, p) | _grid_meta(args)
    cols = ("delta", "T_exact", "T_incoherent", "region")
    return _emit(Table(cols, rows, meta), args)


def cmd_bandwidth(args) -> int:
    p = _params(args)
    if args.steps < 2:
        raise ConfigError("steps must be at least 2")
    if not args.axis_min < args.axis_max:
        raise ConfigError("min must lie below max")
    grid = np.linspace(args.axis_min, args.axis_max, args.steps)
    rows = width_sweep(p, args.axis, grid)
    meta = _meta(args, p) | {"axis": args.axis, "min": _f17(args.axis_min),
                             "max": _f17(args.axis_max),
                             "steps": str(args.steps)}
    cols = ("value", "width_L", "lo1", "hi1", "lo2", "hi2")
    return _emit(Table(cols, rows, meta), args)


def cmd_bands(args) -> int:
    p = _params(args)
    spec = interaction_levels(p)
    lo, hi = stopped_light_region(p)
    rows = []
    for i in range(p.n_atoms):
        pn = float(spec.p[i])
        rows.append((int(spec.n[i]), pn, float(spec.e_minus[i]),
                     float(spec.e_plus[i]),
                     group_velocity(pn, "minus", p),
                     group_velocity(pn, "plus", p),
                     dispersion(pn, p), free_group_velocity(pn, p)))
    meta = _meta(args, p) | {"stopped_light_lo": _f17(lo),
                             "stopped_light_hi": _f17(hi)}
    cols = ("n", "p", "e_minus", "e_plus", "vg_minus", "vg_plus",
            "e_free", "vg_free")
    return _emit(Table(cols, rows, meta), args)


def cmd_convergence(args) -> int:
    p = _params(args)
    try:
        deltas = [float(tok) for tok in args.deltas.split(",") if tok.strip()]
    except ValueError:
        raise ConfigError(f"cannot parse --deltas {args.deltas!r}")
    if not deltas:
        raise ConfigError("need at least one detuning in --deltas")
    if args.na_min < 1 or args.na_max < args.na_min:
        raise ConfigError("need 1 <= na-min <= na-max")
    for d in deltas:
        try:
            incident_momentum(p.Omega_a + d, p)
        except (OutOfBandError, BandEdgeError):
            raise ConfigError(f"delta={d!r} is not strictly in-band")
    rows = []
    from dataclasses import replace
    for d in deltas:
        for na in range(args.na_min, args.na_max + 1):
            q = replace(p, n_atoms=na)
            rows.append((d, na, transmission(p.Omega_a + d, q).T))
    meta = _meta(args, p) | {"deltas": ",".join(_f17(d) for d in deltas),
                             "na_min": str(args.na_min),
                             "na_max": str(args.na_max)}
    return _emit(Table(("delta", "na", "T"), rows, meta), args)


def cmd_disorder(args) -> int:
    p = _params(args)
    grid = _inband_grid(args, p)
    try:
        spec = DisorderSpec(
            distribution="gaussian" if args.dist == "gauss" else "uniform",
            mean_omega=p.omega, mean_v=p.V,
            width_fraction=args.width_frac,
            sigma_omega=args.sigma_omega, sigma_v=args.sigma_v,
            samples=args.samples, seed=args.seed)
    except ValueError as exc:
        raise ConfigError(str(exc))
    meta = _meta(args, p) | _grid_meta(args) | {
        "dist": spec.distribution,
        "width_frac": _f17(spec.width_fraction),
        "sigma_omega": _f17(spec.sigma_omega),
        "sigma_v": _f17(spec.sigma_v),
        "samples": str(spec.samples),
        "seed": str(spec.seed),
    }
    if args.single:
        realization = sample_realization(spec, p.n_atoms, 0)
        meta["realization_index"] = "0"
        meta["omega_sites"] = ",".join(_f17(v) for v in realization.omega_sites)
        meta["v_bonds"] = ",".join(_f17(v) for v in realization.v_bonds)
        rows = []
        for d in grid:
            d = float(d)
            sol = solve_scattering(p.Omega_a + d, realization, p)
            rows.append((d, abs(sol.t) ** 2))
        return _emit(Table(("delta", "T"), rows, meta), args)
    es = ensemble_spectrum(spec, grid, p)
    rows = [(float(es.delta[i]), float(es.mean_T[i]), float(es.std_T[i]),
             int(es.samples[i])) for i in range(len(grid))]
    cols = ("delta", "mean_T", "std_T", "samples")
    return _emit(Table(cols, rows, meta), args)


def cmd_loss(args) -> int:
    p = _params(args)
    grid = _inband_grid(args, p)
    try:
        loss = LossParams(gamma_a=args.gamma_a, gamma_c=args.gamma_c)
    except ValueError as exc:
        raise ConfigError(str(exc))
    rows = []
    for d in grid:
        d = float(d)
        e = p.Omega_a + d
        t_l, _, _ = lossy_transmission(e, loss, p)
        r_l = lossy_reflection(e, loss, p)
        rows.append((d, t_l, r_l, 1.0 - r_l - t_l))
    meta = _meta(args, p) | _grid_meta(args) | {
        "gamma_a": _f17(loss.gamma_a), "gamma_c": _f17(loss.gamma_c)}
    cols = ("delta", "T_L", "R_L", "deficit")
    return _emit(Table(cols, rows, meta), args)


def cmd_validate(args) -> int:
    p = _params(args)
    grid = _grid(args)
    checks = []

    realization = clean_realization(p)
    if args.self_test:
        # corrupt the direct-solve input on purpose; the comparison below
        # must then fail, proving this harness can catch a broken solver
        sites = realization.omega_sites.copy()
        bonds = realization.v_bonds.copy()
        if len(bonds):
            bonds[len(bonds) // 2] = -bonds[len(bonds) // 2]
        else:
            sites[0] += 0.5
        from .lattice import DisorderRealization
        realization = DisorderRealization(sites, bonds)

    worst_t = 0.0
    worst_unitarity = 0.0
    for d in grid:
        e = p.Omega_a + float(d)
        if classify_energy(e, p) in (EnergyRegion.OUTSIDE_BAND,
                                     EnergyRegion.BAND_EDGE):
            continue
        res = transmission(e, p)
        sol = solve_scattering(e, realization, p)
        worst_t = max(worst_t, abs(res.t - sol.t), abs(res.r - sol.r))
        worst_unitarity = max(worst_unitarity,
                              abs(abs(res.r) ** 2 + abs(res.t) ** 2 - 1.0))
    checks.append(("closed form vs direct solve", worst_t < 1e-10,
                   f"max amplitude residual {worst_t:.3e}"))
    checks.append(("unitarity |r|^2+|t|^2=1", worst_unitarity < 1e-10,
                   f"max residual {worst_unitarity:.3e}"))

    spec = interaction_levels(p)
    analytic = np.sort(np.concatenate([spec.e_minus, spec.e_plus]))
    dense = diagonalize_interaction(clean_realization(p), p)
    level_err = float(np.abs(analytic - dense).max())
    checks.append(("two-band levels vs dense diagonalization",
                   level_err < 1e-10, f"max level residual {level_err:.3e}"))

    report = band_edges(p)
    lo, hi = stopped_light_region(p)
    edge_err = max(abs(lo - report.E_minus), abs(hi - report.E_plus))
    checks.append(("stopped-light endpoints vs band edges",
                   edge_err < 1e-10, f"max endpoint residual {edge_err:.3e}"))

    ok = True
    for name, passed, detail in checks:
        tag = "ok  " if passed else "FAIL"
        print(f"{tag} {name}: {detail}")
        ok = ok and passed
    return EXIT_OK if ok else EXIT_VALIDATION


def main(argv=None) -> int:
    parser = _build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    args = parser.parse_args(argv)
    try:
        if getattr(args, "config", None):
            args = _apply_config(args, argv)
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except SingularSystemError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
