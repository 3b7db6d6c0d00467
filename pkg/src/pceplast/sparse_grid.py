"""Nested Gaussian quadrature and Smolyak sparse grids.

The 1D family is the nested Kronrod-Patterson rule for the standard normal
weight (Genz-Keister extensions 1, 3, 9, 19, 35 plus the interpolatory
intermediate orders 7, 17, 31, 33).  Level ``l`` selects the smallest rule
whose polynomial exactness is at least ``2*l - 1``:

=====  ==================  =========
level  nodes               exactness
=====  ==================  =========
1      1                   1
2-3    3                   5
4      7                   7
5-8    9                   15
9      17                  17
10-15  19                  29
16     31                  31
17     33                  33
18-25  35                  51
=====  ==================  =========

A Smolyak grid of level ``L`` in ``s`` dimensions integrates every polynomial
of total degree ``<= 2*L - 1`` exactly.  Examples of point counts: ``s=2``
levels 5, 14, 25 give 37, 261, 921 points; ``s=4`` levels 5, 10, 14, 16 give
201, 3065, 12057, 20681 points.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from ._kpn_tables import TABLES

MAX_LEVEL = 25

#: merged weights cancelled below this fraction of their contributions are dropped
ZERO_WEIGHT = 1e-15


@dataclass(frozen=True)
class Rule1D:
    level: int
    nodes: np.ndarray
    weights: np.ndarray
    exactness: int

    @property
    def size(self) -> int:
        return len(self.nodes)


@dataclass(frozen=True)
class SparseGrid:
    """Sparse grid points ``(i, s)`` and signed weights ``(i,)``."""

    s: int
    level: int
    points: np.ndarray
    weights: np.ndarray

    @property
    def size(self) -> int:
        return len(self.weights)

    @property
    def exactness(self) -> int:
        return 2 * self.level - 1


def _order_for_level(level: int) -> int:
    need = 2 * level - 1
    return min(order for order, (deg, _, _) in TABLES.items() if deg >= need)


# level -> number of 1D nodes
LEVEL_ORDER = {level: _order_for_level(level) for level in range(1, MAX_LEVEL + 1)}

# master list of all nested nodes, sorted; integer ids index into it
_MASTER = np.array([float(x) for x in TABLES[35][1]])


def _check_level(level: int) -> None:
    if not 1 <= level <= MAX_LEVEL:
        raise ValueError(f"level must be in [1, {MAX_LEVEL}], got {level}")


@lru_cache(maxsize=None)
def _rule_ids(level: int) -> tuple[np.ndarray, np.ndarray]:
    _, nodes, weights = TABLES[LEVEL_ORDER[level]]
    x = np.array([float(v) for v in nodes])
    ids = np.searchsorted(_MASTER, x)
    # master and sub-rules come from the same decimal strings
    assert np.array_equal(_MASTER[ids], x)
    return ids, np.array([float(v) for v in weights])


def kpn_rule(level: int) -> Rule1D:
    """Nested Gaussian rule of the given level (see module table)."""
    _check_level(level)
    ids, w = _rule_ids(level)
    order = LEVEL_ORDER[level]
    return Rule1D(level, _MASTER[ids].copy(), w.copy(), TABLES[order][0])


def _level_multi_indices(s: int, lo: int, hi: int):
    """All ``i`` in ``N^s`` (entries >= 1) with ``lo <= |i| <= hi``."""
    def rec(prefix, remaining_dims, budget):
        if remaining_dims == 0:
            yield prefix
            return
        for k in range(1, budget - (remaining_dims - 1) + 1):
            yield from rec(prefix + (k,), remaining_dims - 1, budget - k)

    for idx in rec((), s, hi):
        if sum(idx) >= lo:
            yield idx


@lru_cache(maxsize=32)
def _smolyak_cached(s: int, level: int) -> SparseGrid:
    nmaster = len(_MASTER)
    keys = []
    vals = []
    lo = max(s, level)
    hi = level + s - 1
    for idx in _level_multi_indices(s, lo, hi):
        coef = (-1) ** (hi - sum(idx)) * math.comb(s - 1, sum(idx) - level)
        rules = [_rule_ids(k) for k in idx]
        mesh = np.meshgrid(*[r[0] for r in rules], indexing="ij")
        ids = np.stack([m.ravel() for m in mesh], axis=1)
        w = functools.reduce(np.multiply.outer, [r[1] for r in rules]).ravel()
        key = np.zeros(len(ids), dtype=np.int64)
        for d in range(s):
            key = key * nmaster + ids[:, d]
        keys.append(key)
        vals.append(coef * w)
    keys = np.concatenate(keys)
    vals = np.concatenate(vals)
    uniq, inverse = np.unique(keys, return_inverse=True)
    weights = np.bincount(inverse, weights=vals, minlength=len(uniq))
    scale = np.bincount(inverse, weights=np.abs(vals), minlength=len(uniq))
    # genuine tiny weights (~1e-18 at the outer 35-point nodes) must survive
    keep = np.abs(weights) >= ZERO_WEIGHT * scale
    uniq, weights = uniq[keep], weights[keep]
    ids = np.empty((len(uniq), s), dtype=np.int64)
    rest = uniq.copy()
    for d in range(s - 1, -1, -1):
        ids[:, d] = rest % nmaster
        rest //= nmaster
    points = _MASTER[ids]
    points.setflags(write=False)
    weights.setflags(write=False)
    return SparseGrid(s, level, points, weights)


def smolyak(s: int, level: int) -> SparseGrid:
    """Smolyak combination of the nested rules.

    Points are ordered lexicographically by coordinates; coincident points
    are merged by construction (shared node ids) and their weights summed.
    """
    if s < 1:
        raise ValueError("s must be >= 1")
    _check_level(level)
    if math.comb(level + s - 1, s) > 5_000_000:
        raise ValueError(f"unsupported (s, level) = ({s}, {level}): too many tensor terms")
    return _smolyak_cached(s, level)


def level_for_size(s: int, size: int) -> int:
    """Smallest level whose ``s``-dimensional grid has ``size`` points."""
    for level in range(1, MAX_LEVEL + 1):
        n = smolyak(s, level).size
        if n == size:
            return level
        if n > size:
            break
    raise ValueError(f"no level gives {size} points for s={s}")


def integrate(grid: SparseGrid, f: Callable[[np.ndarray], float]) -> float:
    """``sum_j w_j f(xi_j)``, accumulated in point order."""
    values = np.empty(grid.size)
    for j, x in enumerate(grid.points):
        try:
            values[j] = f(x)
        except Exception as exc:
            raise RuntimeError(f"integrand failed at grid point {j} ({x})") from exc
        if not np.isfinite(values[j]):
            raise ValueError(f"non-finite integrand at grid point {j} ({x})")
    return float(np.dot(grid.weights, values))


def write_grid_csv(grid: SparseGrid, path) -> None:
    """Dump ``index, xi_1..xi_s, w`` rows."""
    from .io import write_csv

    header = ["index"] + [f"xi_{k + 1}" for k in range(grid.s)] + ["w"]
    rows = [[j, *grid.points[j], grid.weights[j]] for j in range(grid.size)]
    write_csv(path, header, rows)
