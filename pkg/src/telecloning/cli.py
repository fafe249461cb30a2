"""Command line front end: run | sample | sweep | criteria.

The machine-readable result (JSON, or CSV for ``sweep``) goes to stdout;
a short human-readable summary goes to stderr. Exit codes: 0 success,
1 configuration error, 2 physicality or numeric-consistency error.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import json
import sys

import numpy as np

from . import __version__
from .config import ConfigError, load_config, opo_params_from, protocol_config_from
from .gaussian import PhysicalityError
from .metrics import (
    UndefinedGainError,
    estimate_gains,
    fidelity_general,
    fidelity_report,
)
from .opo import squeezing_spectra
from .protocol import (
    CloneMoments,
    ProtocolConfig,
    run_analytic,
    run_circuit_analytic,
    run_monte_carlo,
)
from .resource import (
    SqueezerSpec,
    bipartite_criterion_lhs,
    build_telecloning_resource,
    clone_pair_criterion_lhs,
    optimal_squeezing,
)

PATH_AGREEMENT_TOL = 1e-9
_FLOAT_FMT = "%.12g"


def _moments_dict(moments: CloneMoments) -> dict:
    return {name: dataclasses.asdict(getattr(moments, name))
            for name in ("clone1", "clone2")}


def _criteria_dict(config: ProtocolConfig) -> dict:
    resource = build_telecloning_resource(config.spec_i, config.spec_ii,
                                          config.eta_resource)
    return {
        "a_b": bipartite_criterion_lhs(resource, "B"),
        "a_c": bipartite_criterion_lhs(resource, "C"),
        "b_c": clone_pair_criterion_lhs(resource),
    }


def _gains_dict(moments: CloneMoments, alpha: complex) -> dict | None:
    try:
        return dataclasses.asdict(estimate_gains(moments, alpha))
    except UndefinedGainError:
        return None


def _fidelity_dict(moments: CloneMoments, alpha: complex) -> dict:
    return dataclasses.asdict(fidelity_report(moments, alpha))


def _run_output(cfg: dict, config: ProtocolConfig, moments: CloneMoments,
                mode: str) -> dict:
    return {
        "config": cfg,
        "clone_moments": _moments_dict(moments),
        "fidelity": _fidelity_dict(moments, config.input_alpha),
        "criteria": _criteria_dict(config),
        "gains": _gains_dict(moments, config.input_alpha),
        "provenance": {
            "seed": config.seed,
            "shots": config.shots,
            "mode": mode,
            "version": __version__,
        },
    }


def _emit(document: dict) -> None:
    json.dump(document, sys.stdout, indent=2, allow_nan=False)
    sys.stdout.write("\n")


def _summary(lines: list[str]) -> None:
    for line in lines:
        print(line, file=sys.stderr)


def cmd_run(args) -> int:
    cfg = load_config(args.config)
    config = protocol_config_from(cfg)
    direct = run_analytic(config)
    circuit = run_circuit_analytic(config)
    worst = max(
        abs(getattr(getattr(direct, c), f) - getattr(getattr(circuit, c), f))
        for c in ("clone1", "clone2")
        for f in ("mean_x", "mean_p", "var_x", "var_p")
    )
    if worst > PATH_AGREEMENT_TOL:
        print(f"error: analytic paths disagree by {worst:.3e}", file=sys.stderr)
        return 2
    out = _run_output(cfg, config, circuit, "analytic")
    out["provenance"]["path_agreement"] = worst
    _emit(out)
    _summary([
        f"clone fidelities: {out['fidelity']['f_clone1']:.9g} "
        f"{out['fidelity']['f_clone2']:.9g} (classical 0.5, optimal 2/3)",
        f"criterion A-B: {out['criteria']['a_b']:.9g} (< 1 certifies entanglement)",
    ])
    return 0


def cmd_sample(args) -> int:
    cfg = load_config(args.config)
    if args.shots is not None:
        cfg["run.shots"] = args.shots
    if args.seed is not None:
        cfg["run.seed"] = args.seed
    config = protocol_config_from(cfg)
    moments, records = run_monte_carlo(config, sampled=args.sampled)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(["shot", "x_u", "p_v", "x1", "p1", "x2", "p2"])
            for j, r in enumerate(records):
                writer.writerow([j] + [_FLOAT_FMT % v for v in
                                       (r.x_u, r.p_v, r.x1, r.p1, r.x2, r.p2)])
    out = _run_output(cfg, config, moments, "monte-carlo")
    _emit(out)
    _summary([
        f"{config.shots} shots, seed {config.seed}",
        f"estimated fidelities: {out['fidelity']['f_clone1']:.9g} "
        f"{out['fidelity']['f_clone2']:.9g}",
    ])
    return 0


def cmd_sweep(args) -> int:
    cfg = load_config(args.config)
    config = protocol_config_from(cfg)
    if args.stop <= args.start:
        raise ConfigError("--from must be smaller than --to")
    if args.steps < 2:
        raise ConfigError("--steps must be at least 2")
    grid = np.linspace(args.start, args.stop, args.steps)

    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["param_value", "squeezing_db", "antisqueezing_db",
                     "var_x_clone", "var_p_clone", "fidelity"])
    for value in grid:
        if args.param == "squeezing_db":
            spec = SqueezerSpec.pure(float(value))
        else:
            spec = squeezing_spectra(opo_params_from(cfg), float(value))
        point = dataclasses.replace(config, spec_i=spec, spec_ii=spec)
        clone = run_analytic(point).clone1
        fid = fidelity_general((clone.mean_x, clone.mean_p),
                               np.diag([clone.var_x, clone.var_p]),
                               point.input_alpha)
        writer.writerow([_FLOAT_FMT % v for v in
                         (value, spec.squeezing_db, spec.antisqueezing_db,
                          clone.var_x, clone.var_p, fid)])
    return 0


def cmd_criteria(args) -> int:
    cfg = load_config(args.config)
    config = protocol_config_from(cfg)
    r_star, e_minus_2r, db = optimal_squeezing()
    out = {
        "config": cfg,
        "criteria": _criteria_dict(config),
        "optimal_squeezing": {"r_star": r_star, "e_minus_2r": e_minus_2r, "db": db},
    }
    _emit(out)
    _summary([f"criterion A-B: {out['criteria']['a_b']:.9g}, "
              f"minimum 0.5 at {db:.9g} dB"])
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="telecloning",
        description="Simulate 1-to-2 telecloning of optical coherent states.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="analytic run with dual-path consistency check")
    run.add_argument("config")
    run.set_defaults(func=cmd_run)

    sample = sub.add_parser("sample", help="Monte Carlo run with per-shot records")
    sample.add_argument("config")
    sample.add_argument("--shots", type=int, default=None)
    sample.add_argument("--seed", type=int, default=None)
    sample.add_argument("--csv", default=None, metavar="PATH",
                        help="write per-shot records to this file")
    sample.add_argument("--sampled", action="store_true",
                        help="draw one output quadrature per clone per shot")
    sample.set_defaults(func=cmd_sample)

    sweep = sub.add_parser("sweep", help="fidelity curve over squeezing or pump power")
    sweep.add_argument("config")
    sweep.add_argument("--param", choices=("squeezing_db", "pump_mw"), required=True)
    sweep.add_argument("--from", dest="start", type=float, required=True)
    sweep.add_argument("--to", dest="stop", type=float, required=True)
    sweep.add_argument("--steps", type=int, required=True)
    sweep.set_defaults(func=cmd_sweep)

    criteria = sub.add_parser("criteria", help="inseparability criterion values")
    criteria.add_argument("config")
    criteria.set_defaults(func=cmd_criteria)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 1
    except PhysicalityError as exc:
        print(f"physicality error: {exc}", file=sys.stderr)
        return 2
    except (np.linalg.LinAlgError, ArithmeticError) as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
