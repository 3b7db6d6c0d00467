"""End-to-end study: MC reference, surrogates, error tables, R^2, manifest.

Output files (steps are numbered ``t = 1 .. T``; point indices start at 0):

``stats_mc.csv``              t, mean, std, q01 of the full-model MC run
``stats_p{p}_i{i}.csv``       t, sampled mean/std/q01 and analytic mean/std
``pce_p{p}_i{i}.csv``         surrogate coefficients (see :mod:`pceplast.pce`)
``snapshots/snapshots_L*``    collocation responses plus provenance sidecar
``errors.csv``                relative errors laid out like the paper's tables
``errors_long.csv``           every (metric, source, p, i) error in long form
``r2.csv``                    t and one R^2 column per (p, i)
``manifest.json``             config echo, versions, seeds, wall times

All CSV bodies are pure functions of (config, seed); wall-clock numbers live
only in the manifest.
"""
from __future__ import annotations

import datetime as _dt
import json
import os
import platform
import time

import numpy as np
import scipy

from . import __version__
from .analysis import column_stats, mc_reference, r_squared, relative_error, sample_surrogate
from .collocation import build_surrogate
from .config import StudyConfig
from .io import write_csv
from .pce import analytic_mean, analytic_std, basis_size, write_surrogate_csv
from .sparse_grid import smolyak


def plan(config: StudyConfig) -> dict:
    inp = config.stochastic_input()
    T = config.path.steps
    grids = {lv: smolyak(inp.s, lv).size for lv in config.grid.levels}
    return {
        "s": inp.s,
        "steps": T,
        "mc_samples": config.mc.n,
        "grid_points": grids,
        "basis_sizes": {p: basis_size(inp.s, p) for p in config.pce.degrees},
        "model_runs": config.mc.n + sum(grids.values()),
        "material_point_updates": (config.mc.n + sum(grids.values())) * T,
    }


def _versions() -> dict:
    return {"pceplast": __version__, "python": platform.python_version(),
            "numpy": np.__version__, "scipy": scipy.__version__}


def write_manifest(out: str, manifest: dict) -> None:
    with open(os.path.join(out, "manifest.json"), "w") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")


def run_study(config: StudyConfig, out: str, threads: int = 1, log=print) -> dict:
    os.makedirs(out, exist_ok=True)
    inp = config.stochastic_input()
    path = config.load_path()
    n, seed = config.mc.n, config.mc.seed
    steps = np.arange(1, path.steps + 1)
    manifest = {
        "config": config.echo(),
        "versions": _versions(),
        "seeds": {"mc": seed},
        "threads": threads,
        "started": _dt.datetime.now(_dt.timezone.utc).isoformat(),
        "plan": plan(config),
        "outputs": [],
        "timing": {},
        "complete": False,
    }

    def emit(name, header, rows):
        write_csv(os.path.join(out, name), header, rows)
        manifest["outputs"].append(name)

    try:
        t0 = time.perf_counter()
        log(f"MC reference: {n} samples x {path.steps} steps")
        ref, archive = mc_reference(inp, path, n, seed, threads)
        manifest["timing"]["mc_seconds"] = time.perf_counter() - t0
        emit("stats_mc.csv", ["t", "mean", "std", "q01"],
             zip(steps, ref.mean, ref.std, ref.q01))

        errors = {}
        r2_cols = {}
        snap_dir = os.path.join(out, "snapshots")
        for level in config.grid.levels:
            for p in config.pce.degrees:
                t1 = time.perf_counter()
                sur, prov = build_surrogate(inp, path, p, level, threads=threads, cache_dir=snap_dir)
                t2 = time.perf_counter()
                i = prov.n_points
                log(f"surrogate p={p} i={i} (level {level}, R={prov.R})")
                tag = f"p{p}_i{i}"
                write_surrogate_csv(sur, os.path.join(out, f"pce_{tag}.csv"))
                manifest["outputs"].append(f"pce_{tag}.csv")
                samples = sample_surrogate(sur, n, seed, threads)
                sampled = column_stats(samples)
                del samples
                t3 = time.perf_counter()
                a_mean, a_std = analytic_mean(sur), analytic_std(sur)
                emit(f"stats_{tag}.csv",
                     ["t", "mean", "std", "q01", "mean_analytic", "std_analytic"],
                     zip(steps, sampled.mean, sampled.std, sampled.q01, a_mean, a_std))
                errors[(p, i)] = {
                    ("mean", "analytic"): relative_error(a_mean, ref.mean),
                    ("std", "analytic"): relative_error(a_std, ref.std),
                    ("mean", "sampled"): relative_error(sampled.mean, ref.mean),
                    ("std", "sampled"): relative_error(sampled.std, ref.std),
                    ("q01", "sampled"): relative_error(sampled.q01, ref.q01),
                }
                r2_cols[tag] = r_squared(sur, archive, threads=threads)
                manifest["timing"][tag] = {
                    "level": level, "grid_points": i,
                    "build_seconds": t2 - t1, "sampling_seconds": t3 - t2,
                    "surrogate_samples": n,
                }

        levels = [smolyak(inp.s, lv).size for lv in config.grid.levels]
        degrees = config.pce.degrees
        header = ["metric", "p"] + [f"i={i}" for i in levels]
        rows = [["mean", "-"] + [errors[(degrees[-1], i)][("mean", "analytic")] for i in levels]]
        rows += [["std", p] + [errors[(p, i)][("std", "analytic")] for i in levels] for p in degrees]
        rows += [["q01", p] + [errors[(p, i)][("q01", "sampled")] for i in levels] for p in degrees]
        emit("errors.csv", header, rows)
        emit("errors_long.csv", ["metric", "source", "p", "i", "error"],
             ([m, src, p, i, e] for (p, i), d in errors.items() for (m, src), e in d.items()))
        tags = list(r2_cols)
        emit("r2.csv", ["t"] + tags, ([t] + [r2_cols[k][t - 1] for k in tags] for t in steps))
        manifest["complete"] = True
    finally:
        manifest["finished"] = _dt.datetime.now(_dt.timezone.utc).isoformat()
        write_manifest(out, manifest)
    return manifest
