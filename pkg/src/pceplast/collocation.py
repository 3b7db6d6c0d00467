"""Non-intrusive spectral projection of the material-point response."""
from __future__ import annotations

import hashlib
import json
import os
from dataclasses import asdict, dataclass

import numpy as np

from . import __version__
from .io import read_csv, write_csv
from .material import LoadPath, run_uniaxial
from .parallel import map_chunks
from .pce import PceSurrogate, basis_matrix, basis_size, full_index_set, gammas
from .sparse_grid import SparseGrid, smolyak
from .stochastic import StochasticInput, realize_parameters


class ModelEvaluationError(RuntimeError):
    pass


def collect_snapshots(inp: StochasticInput, path: LoadPath, grid: SparseGrid,
                      threads: int = 1) -> np.ndarray:
    """Model responses at the grid points, shape ``(i, T)``."""
    if grid.s != inp.s:
        raise ValueError(f"grid dimension {grid.s} != number of random inputs {inp.s}")

    def run(a, b):
        try:
            return run_uniaxial(realize_parameters(inp, grid.points[a:b]), path).sigma11
        except Exception as exc:
            # locate the offending point
            for j in range(a, b):
                try:
                    run_uniaxial(realize_parameters(inp, grid.points[j]), path)
                except Exception as inner:
                    raise ModelEvaluationError(
                        f"model failed at grid point {j} (xi = {grid.points[j].tolist()}): {inner}") from exc
            raise

    return np.concatenate(map_chunks(run, grid.size, threads))


def project(snapshots: np.ndarray, grid: SparseGrid, index_set: np.ndarray,
            gamma: np.ndarray | None = None) -> PceSurrogate:
    """``u[t, a] = sum_j snapshots[j, t] H_a(xi_j) w_j / gamma_a``."""
    snapshots = np.asarray(snapshots, dtype=float)
    if snapshots.ndim != 2 or snapshots.shape[0] != grid.size:
        raise ValueError(f"snapshots must have shape ({grid.size}, T), got {snapshots.shape}")
    if gamma is None:
        gamma = gammas(index_set)
    weighted = basis_matrix(index_set, grid.points) * grid.weights[:, None]
    coefficients = (snapshots.T @ weighted) / gamma
    s = index_set.shape[1]
    p = int(index_set.sum(axis=1).max())
    return PceSurrogate(s, p, index_set, coefficients, np.asarray(gamma, dtype=float))


@dataclass(frozen=True)
class Provenance:
    study_hash: str
    s: int
    level: int
    n_points: int
    p: int
    R: int
    steps: int
    version: str = __version__


def study_hash(inp: StochasticInput, path: LoadPath, s: int, level: int) -> str:
    payload = {
        "marginals": [[n, asdict(m)] for n, m in inp.marginals],
        "eps11": [float(v).hex() for v in path.eps11],
        "grid": [s, level],
    }
    return hashlib.sha256(json.dumps(payload, sort_keys=True).encode()).hexdigest()[:16]


def snapshot_paths(cache_dir, level: int) -> tuple[str, str]:
    base = os.path.join(cache_dir, f"snapshots_L{level}")
    return base + ".csv", base + ".json"


def write_snapshots(cache_dir, level: int, snapshots: np.ndarray, meta: dict) -> None:
    csv_path, json_path = snapshot_paths(cache_dir, level)
    n, T = snapshots.shape
    rows = ([j, t + 1, snapshots[j, t]] for j in range(n) for t in range(T))
    write_csv(csv_path, ["point", "t", "sigma11"], rows)
    with open(json_path, "w") as fh:
        json.dump(meta, fh, indent=2, sort_keys=True)
        fh.write("\n")


def read_snapshots(cache_dir, level: int, expected_hash: str) -> np.ndarray | None:
    csv_path, json_path = snapshot_paths(cache_dir, level)
    if not (os.path.exists(csv_path) and os.path.exists(json_path)):
        return None
    with open(json_path) as fh:
        meta = json.load(fh)
    if meta.get("study_hash") != expected_hash:
        return None
    _, rows = read_csv(csv_path)
    data = np.array(rows, dtype=float)
    return data[:, 2].reshape(meta["n_points"], meta["steps"])


def build_surrogate(inp: StochasticInput, path: LoadPath, p: int, level: int,
                    s: int | None = None, threads: int = 1, cache_dir=None,
                    snapshots: np.ndarray | None = None):
    """Grid, model runs, projection; returns ``(surrogate, provenance)``.

    With ``cache_dir`` the snapshot matrix is stored once per grid level and
    reused for every degree ``p``.
    """
    s = inp.s if s is None else s
    if s != inp.s:
        raise ValueError(f"s={s} but the input has {inp.s} random coordinates")
    grid = smolyak(s, level)
    h = study_hash(inp, path, s, level)
    if snapshots is None and cache_dir is not None:
        snapshots = read_snapshots(cache_dir, level, h)
    if snapshots is None:
        snapshots = collect_snapshots(inp, path, grid, threads)
        if cache_dir is not None:
            write_snapshots(cache_dir, level, snapshots,
                            {"study_hash": h, "s": s, "level": level, "n_points": grid.size,
                             "steps": path.steps, "eps11": path.eps11.tolist()})
    surrogate = project(snapshots, grid, full_index_set(s, p))
    prov = Provenance(h, s, level, grid.size, p, basis_size(s, p), path.steps)
    return surrogate, prov
