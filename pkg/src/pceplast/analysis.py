"""Monte Carlo reference statistics, surrogate statistics and error measures.

Quantiles use the lower empirical order statistic: the ``q``-quantile of ``n``
values is the ``ceil(q * n)``-th smallest (1-based), without interpolation.
"""
from __future__ import annotations

import math
import os
import time
from dataclasses import dataclass, field

import numpy as np

from .collocation import ModelEvaluationError, collect_snapshots, project
from .material import LoadPath, run_uniaxial
from .parallel import DEFAULT_CHUNK, chunk_ranges, map_chunks
from .pce import PceSurrogate, analytic_mean, analytic_std, full_index_set
from .sparse_grid import smolyak
from .stochastic import StochasticInput, realize_parameters, sample_standard_normals

QUANTILE = 0.01


@dataclass(frozen=True)
class StatSeries:
    mean: np.ndarray
    std: np.ndarray
    q01: np.ndarray | None = None


def order_statistic_rank(n: int, q: float = QUANTILE) -> int:
    """1-based rank ``ceil(q n)`` (at least 1)."""
    # round first so that e.g. 0.01 * 100 is not ceil'ed to 2
    return max(1, math.ceil(round(q * n, 9)))


def empirical_quantile(values: np.ndarray, q: float = QUANTILE) -> float:
    values = np.asarray(values, dtype=float)
    k = order_statistic_rank(len(values), q) - 1
    return float(np.partition(values, k)[k])


def column_stats(columns: np.ndarray, q: float = QUANTILE) -> StatSeries:
    """Statistics of a step-major ``(T, n)`` sample array."""
    T, n = columns.shape
    mean = np.empty(T)
    std = np.empty(T)
    quant = np.empty(T)
    k = order_statistic_rank(n, q) - 1
    for t in range(T):
        col = np.asarray(columns[t])
        # shifted two-pass moments; exact for constant columns
        shifted = col - col[0]
        m = shifted.mean()
        mean[t] = col[0] + m
        dev = shifted - m
        std[t] = math.sqrt(float(np.dot(dev, dev)) / (n - 1)) if n > 1 else 0.0
        quant[t] = np.partition(col, k)[k]
    return StatSeries(mean, std, quant)


class ResponseArchive:
    """Step-major ``(T, n)`` store of MC responses plus the sampling key.

    Backed by an ``.npy`` memmap when created with a file path, otherwise by
    an in-memory array.  ``xi(a, b)`` regenerates the input samples.
    """

    def __init__(self, data: np.ndarray, seed: int, s: int, path: str | None = None):
        self.data = data
        self.seed = seed
        self.s = s
        self.path = path

    @classmethod
    def create(cls, T: int, n: int, seed: int, s: int, path: str | None = None):
        if path is None:
            return cls(np.empty((T, n)), seed, s)
        os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
        data = np.lib.format.open_memmap(path, mode="w+", dtype=np.float64, shape=(T, n))
        return cls(data, seed, s, path)

    @classmethod
    def open(cls, path: str, seed: int, s: int):
        return cls(np.load(path, mmap_mode="r"), seed, s, path)

    @property
    def steps(self) -> int:
        return self.data.shape[0]

    @property
    def n(self) -> int:
        return self.data.shape[1]

    def column(self, t: int) -> np.ndarray:
        return np.asarray(self.data[t])

    def block(self, a: int, b: int) -> np.ndarray:
        """Samples ``a .. b-1`` as ``(b - a, T)``."""
        return np.asarray(self.data[:, a:b]).T

    def xi(self, a: int = 0, b: int | None = None) -> np.ndarray:
        b = self.n if b is None else b
        return sample_standard_normals(self.s, b - a, self.seed, start=a)

    def flush(self) -> None:
        if isinstance(self.data, np.memmap):
            self.data.flush()


def mc_reference(inp: StochasticInput, path: LoadPath, n: int, seed: int,
                 threads: int = 1, archive_path: str | None = None,
                 chunk: int = DEFAULT_CHUNK):
    """Full-model Monte Carlo; returns ``(StatSeries, ResponseArchive)``."""
    if n < 2:
        raise ValueError("need n >= 2 samples")
    archive = ResponseArchive.create(path.steps, n, seed, inp.s, archive_path)
    failures = []

    def run(a, b):
        xi = sample_standard_normals(inp.s, b - a, seed, start=a)
        try:
            archive.data[:, a:b] = run_uniaxial(realize_parameters(inp, xi), path).sigma11.T
        except Exception:
            bad = []
            for j in range(a, b):
                try:
                    run_uniaxial(realize_parameters(inp, xi[j - a]), path)
                except Exception:
                    bad.append(j)
            failures.extend(bad)

    map_chunks(run, n, threads, chunk)
    if failures:
        raise ModelEvaluationError(f"{len(failures)} of {n} MC samples failed "
                                   f"(first index {min(failures)})")
    archive.flush()
    return column_stats(archive.data), archive


def surrogate_chunk(surrogate: PceSurrogate) -> int:
    """Sample chunk bounding the basis matrix to ~128 MB (depends on R only)."""
    return int(min(DEFAULT_CHUNK, max(256, 2 ** 24 // surrogate.size)))


def sample_surrogate(surrogate: PceSurrogate, n: int, seed: int, threads: int = 1,
                     chunk: int | None = None) -> np.ndarray:
    """Surrogate responses on the shared MC samples, step-major ``(T, n)``."""
    chunk = surrogate_chunk(surrogate) if chunk is None else chunk
    out = np.empty((surrogate.steps, n))

    def run(a, b):
        out[:, a:b] = surrogate.evaluate(sample_standard_normals(surrogate.s, b - a, seed, start=a)).T

    map_chunks(run, n, threads, chunk)
    return out


def surrogate_stats(surrogate: PceSurrogate, n: int, seed: int, threads: int = 1):
    """``(sampled, analytic)``; the analytic series has no quantile."""
    analytic = StatSeries(analytic_mean(surrogate), analytic_std(surrogate))
    if n < 2:
        return None, analytic
    return column_stats(sample_surrogate(surrogate, n, seed, threads)), analytic


def relative_error(v, v_ref) -> float:
    """``||v - v_ref||_2 / ||v_ref||_2`` over the step sequence."""
    v = np.asarray(v, dtype=float)
    v_ref = np.asarray(v_ref, dtype=float)
    if v.shape != v_ref.shape:
        raise ValueError(f"length mismatch {v.shape} vs {v_ref.shape}")
    ref = np.linalg.norm(v_ref)
    if ref == 0:
        raise ValueError("reference has zero norm")
    return float(np.linalg.norm(v - v_ref) / ref)


def r_squared(surrogate: PceSurrogate, archive: ResponseArchive, xi_samples=None, t=None,
              threads: int = 1, chunk: int | None = None):
    """Per-step coefficient of determination of the surrogate on the MC samples.

    ``xi_samples`` (optional) must equal the archive's own input samples.
    """
    if surrogate.s != archive.s or surrogate.steps != archive.steps:
        raise ValueError("surrogate and archive come from different studies")
    if xi_samples is not None:
        xi_samples = np.asarray(xi_samples, dtype=float)
        if xi_samples.shape != (archive.n, archive.s):
            raise ValueError("xi samples do not match the archive's sample set")
    chunk = surrogate_chunk(surrogate) if chunk is None else chunk
    mean = np.array([archive.column(k).mean() for k in range(archive.steps)])

    def run(a, b):
        xi = archive.xi(a, b)
        if xi_samples is not None and not np.array_equal(xi, xi_samples[a:b]):
            raise ValueError("xi samples do not match the archive's sample set")
        mc = archive.block(a, b)
        res = mc - surrogate.evaluate(xi)
        dev = mc - mean
        return np.einsum("ij,ij->j", res, res), np.einsum("ij,ij->j", dev, dev)

    parts = map_chunks(run, archive.n, threads, chunk)
    num = np.zeros(archive.steps)
    den = np.zeros(archive.steps)
    for pn, pd in parts:
        num += pn
        den += pd
    r2 = np.empty(archive.steps)
    for k in range(archive.steps):
        if den[k] <= 1e-20:
            if num[k] > 1e-20:
                raise ValueError(f"step {k}: zero reference variance but nonzero residual")
            r2[k] = 1.0
        else:
            r2[k] = 1.0 - num[k] / den[k]
    return r2 if t is None else float(r2[t])


@dataclass(frozen=True)
class TimingConfig:
    """One timing point: full MC when ``p`` is None, otherwise a PC surrogate."""

    inp: StochasticInput
    path: LoadPath
    n_samples: int
    seed: int = 0
    p: int | None = None
    level: int | None = None
    label: str = ""


@dataclass(frozen=True)
class TimingRecord:
    label: str
    n_model_evals: int
    model_eval_seconds: float
    surrogate_build_seconds: float = 0.0
    surrogate_sampling_seconds: float = 0.0
    n_surrogate_samples: int = 0
    extra: dict = field(default_factory=dict)


def timing_study(configurations, threads: int = 1) -> list[TimingRecord]:
    """Wall-clock (``time.perf_counter``) of model runs, projection and sampling."""
    records = []
    for cfg in configurations:
        clock = time.perf_counter
        if cfg.p is None:
            t0 = clock()
            if cfg.n_samples > 0:
                mc_reference(cfg.inp, cfg.path, max(cfg.n_samples, 2), cfg.seed, threads)
            records.append(TimingRecord(cfg.label, cfg.n_samples, clock() - t0))
            continue
        grid = smolyak(cfg.inp.s, cfg.level)
        t0 = clock()
        snaps = collect_snapshots(cfg.inp, cfg.path, grid, threads)
        t1 = clock()
        sur = project(snaps, grid, full_index_set(cfg.inp.s, cfg.p))
        t2 = clock()
        if cfg.n_samples > 0:
            sample_surrogate(sur, cfg.n_samples, cfg.seed, threads)
        t3 = clock()
        records.append(TimingRecord(cfg.label, grid.size, t1 - t0, t2 - t1, t3 - t2, cfg.n_samples))
    return records


__all__ = [
    "QUANTILE", "ResponseArchive", "StatSeries", "TimingConfig", "TimingRecord",
    "chunk_ranges", "column_stats", "empirical_quantile", "mc_reference",
    "order_statistic_rank", "r_squared", "relative_error", "sample_surrogate",
    "surrogate_stats", "timing_study",
]
