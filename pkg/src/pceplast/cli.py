"""Command line entry point: ``pceplast run | grid | trace``.

Exit codes: 0 success, 2 configuration error, 3 numerical failure.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np
from pydantic import ValidationError

from .collocation import ModelEvaluationError
from .config import StudyConfig, load_config
from .io import write_csv
from .material import ConvergenceError, InvalidInputError, run_uniaxial
from .parallel import default_threads
from .pce import eval_surrogate, read_surrogate_csv
from .sparse_grid import smolyak, write_grid_csv
from .stochastic import realize_parameters

EXIT_OK, EXIT_CONFIG, EXIT_NUMERIC = 0, 2, 3


class ConfigError(Exception):
    pass


def _study_args(p):
    p.add_argument("--config", help="study JSON file")
    p.add_argument("--experiment", choices=["exp1", "exp2"], help="built-in preset")
    p.add_argument("--pce-degree", type=int, nargs="+", metavar="P")
    p.add_argument("--grid-level", type=int, nargs="+", metavar="L")
    p.add_argument("--mc-samples", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--threads", type=int, default=default_threads())
    p.add_argument("--out", help="output directory (fallback: $PCEPLAST_OUT)")
    p.add_argument("--dry-run", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pceplast", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="MC reference, surrogates, error tables, R^2")
    _study_args(run)

    grid = sub.add_parser("grid", help="write a sparse grid as CSV")
    grid.add_argument("--dim", type=int, default=2)
    grid.add_argument("--grid-level", type=int, required=True)
    grid.add_argument("--out", help="output directory (fallback: $PCEPLAST_OUT)")
    grid.add_argument("--dry-run", action="store_true")

    trace = sub.add_parser("trace", help="model (and surrogate) response at given xi")
    _study_args(trace)
    trace.add_argument("--xi", type=float, nargs="+", required=True)
    trace.add_argument("--surrogate", help="surrogate CSV to evaluate alongside the model")
    trace.add_argument("--sweep", type=float, nargs=3, metavar=("LO", "HI", "N"),
                       help="vary the --sweep-dim coordinate over [LO, HI] in N points")
    trace.add_argument("--sweep-dim", type=int, default=1, help="1-based coordinate to sweep")
    trace.add_argument("--at-steps", type=int, nargs="+", default=[29, 34],
                       help="1-based steps written for a sweep")
    return parser


def resolve_config(args) -> StudyConfig:
    if args.config:
        base = load_config(args.config)
        if args.experiment and args.experiment != base.experiment:
            raise ConfigError("--experiment conflicts with the config file")
    elif args.experiment:
        base = StudyConfig(experiment=args.experiment)
    else:
        raise ConfigError("need --config or --experiment")
    data = base.echo()
    if base.experiment != "custom":
        # presets re-fill the locked sections
        data.pop("marginals")
        data.pop("path")
    if args.pce_degree:
        data["pce"] = {"degrees": args.pce_degree}
    if args.grid_level:
        data["grid"] = {"levels": args.grid_level}
    if args.mc_samples is not None:
        data["mc"]["n"] = args.mc_samples
    if args.seed is not None:
        data["mc"]["seed"] = args.seed
    if args.out:
        data["outputs"] = args.out
    elif not data.get("outputs") and os.environ.get("PCEPLAST_OUT"):
        data["outputs"] = os.environ["PCEPLAST_OUT"]
    return StudyConfig.model_validate(data)


def _out_dir(args, config=None) -> str:
    out = args.out or (config.outputs if config else None) or os.environ.get("PCEPLAST_OUT")
    if not out:
        raise ConfigError("no output directory: pass --out or set PCEPLAST_OUT")
    return out


def cmd_run(args) -> int:
    from .study import plan, run_study

    config = resolve_config(args)
    out = _out_dir(args, config)
    if args.dry_run:
        print(json.dumps({"outputs": out, **plan(config)}, indent=2, default=str))
        return EXIT_OK
    run_study(config, out, threads=args.threads, log=lambda m: print(m, file=sys.stderr))
    print(out)
    return EXIT_OK


def cmd_grid(args) -> int:
    grid = smolyak(args.dim, args.grid_level)
    if not args.dry_run:
        out = _out_dir(args)
        write_grid_csv(grid, os.path.join(out, f"grid_s{args.dim}_L{args.grid_level}.csv"))
    print(grid.size)
    return EXIT_OK


def cmd_trace(args) -> int:
    config = resolve_config(args)
    inp = config.stochastic_input()
    path = config.load_path()
    xi = np.array(args.xi, dtype=float)
    if xi.shape != (inp.s,):
        raise ConfigError(f"--xi needs {inp.s} values, got {len(xi)}")
    sur = read_surrogate_csv(args.surrogate) if args.surrogate else None
    if sur is not None and (sur.s != inp.s or sur.steps != path.steps):
        raise ConfigError("surrogate does not match the study dimensions")
    if args.dry_run:
        print(json.dumps({"s": inp.s, "steps": path.steps, "sweep": args.sweep}))
        return EXIT_OK
    out = _out_dir(args, config)
    written = []
    if args.sweep is None:
        model = run_uniaxial(realize_parameters(inp, xi), path).sigma11
        header = ["t", "eps11", "sigma11_model"]
        cols = [np.arange(1, path.steps + 1), path.eps11, model]
        if sur is not None:
            header.append("sigma11_pce")
            cols.append(sur.evaluate(xi))
        name = os.path.join(out, "trace.csv")
        write_csv(name, header, zip(*cols))
        written.append(name)
    else:
        lo, hi, npts = args.sweep
        k = args.sweep_dim - 1
        if not 0 <= k < inp.s:
            raise ConfigError("--sweep-dim out of range")
        pts = np.repeat(xi[None, :], int(npts), axis=0)
        pts[:, k] = np.linspace(lo, hi, int(npts))
        model = run_uniaxial(realize_parameters(inp, pts), path).sigma11
        pce_vals = sur.evaluate(pts) if sur is not None else None
        for t in args.at_steps:
            if not 1 <= t <= path.steps:
                raise ConfigError(f"step {t} outside 1..{path.steps}")
            header = [f"xi_{k + 1}", "sigma11_model"] + (["sigma11_pce"] if sur is not None else [])
            cols = [pts[:, k], model[:, t - 1]] + ([pce_vals[:, t - 1]] if sur is not None else [])
            name = os.path.join(out, f"slice_T{t}.csv")
            write_csv(name, header, zip(*cols))
            written.append(name)
    for name in written:
        print(name)
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = {"run": cmd_run, "grid": cmd_grid, "trace": cmd_trace}[args.command]
    try:
        return handler(args)
    except (ConfigError, ValidationError, FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ValueError as exc:
        # bad grid level / dimension requests and similar
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (ConvergenceError, ModelEvaluationError, InvalidInputError, FloatingPointError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
