"""Hermite polynomial chaos: basis, multi-index sets and surrogate statistics.

The basis uses probabilists' Hermite polynomials ``He_n`` (orthogonal under
the standard normal density, ``E[He_n^2] = n!``).  Multi-indices of a full
total-degree set are listed in graded order; within one degree the first
component decreases, e.g. for ``s = 2, p = 2``::

    (0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)

Serialized surrogates are CSV files with columns
``t, alpha_1 .. alpha_s, u_alpha, gamma_alpha``: one row per step ``t = 1..T``
and multi-index, indices in the order above.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .io import read_csv, write_csv

MAX_BASIS_SIZE = 1_000_000


def hermite_1d(n: int, x):
    """``He_n(x)`` by the three-term recurrence."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    x = np.asarray(x, dtype=float)
    prev, cur = np.ones_like(x), x
    if n == 0:
        return prev
    for k in range(1, n):
        prev, cur = cur, x * cur - k * prev
    return cur


def hermite_table(p: int, x) -> np.ndarray:
    """``He_0 .. He_p`` at ``x``, stacked on a new last axis."""
    x = np.asarray(x, dtype=float)
    out = np.empty(x.shape + (p + 1,))
    out[..., 0] = 1.0
    if p >= 1:
        out[..., 1] = x
    for k in range(1, p):
        out[..., k + 1] = x * out[..., k] - k * out[..., k - 1]
    return out


def basis_size(s: int, p: int) -> int:
    return math.comb(s + p, p)


def full_index_set(s: int, p: int) -> np.ndarray:
    """All ``alpha`` with ``|alpha| <= p``, graded order, as an ``(R, s)`` int array."""
    if s < 1 or p < 0:
        raise ValueError("need s >= 1 and p >= 0")
    size = basis_size(s, p)
    if size > MAX_BASIS_SIZE:
        raise ValueError(f"basis of size {size} exceeds cap {MAX_BASIS_SIZE}")

    def compositions(total, dims):
        if dims == 1:
            yield (total,)
            return
        for first in range(total, -1, -1):
            for rest in compositions(total - first, dims - 1):
                yield (first,) + rest

    out = [alpha for d in range(p + 1) for alpha in compositions(d, s)]
    return np.array(out, dtype=np.int64).reshape(size, s)


def gammas(index_set: np.ndarray) -> np.ndarray:
    """Squared norms ``prod_k alpha_k!``."""
    fact = np.array([math.factorial(k) for k in range(int(index_set.max(initial=0)) + 1)], dtype=float)
    return np.prod(fact[index_set], axis=-1)


def eval_basis(alpha, xi) -> np.ndarray:
    """``H_alpha(xi) = prod_k He_{alpha_k}(xi_k)``; ``xi`` is ``(s,)`` or ``(n, s)``."""
    alpha = np.asarray(alpha)
    xi = np.asarray(xi, dtype=float)
    if xi.shape[-1] != len(alpha):
        raise ValueError("dimension mismatch between alpha and xi")
    out = np.ones(xi.shape[:-1])
    for k, a in enumerate(alpha):
        out = out * hermite_1d(int(a), xi[..., k])
    return out


def basis_matrix(index_set: np.ndarray, xi) -> np.ndarray:
    """``Psi[j, r] = H_{alpha_r}(xi_j)`` for an ``(n, s)`` point set."""
    xi = np.atleast_2d(np.asarray(xi, dtype=float))
    n, s = xi.shape
    if index_set.shape[1] != s:
        raise ValueError(f"points have dimension {s}, index set {index_set.shape[1]}")
    p = int(index_set.max(initial=0))
    table = hermite_table(p, xi)  # (n, s, p+1)
    psi = np.ones((n, len(index_set)))
    for k in range(s):
        psi *= table[:, k, index_set[:, k]]
    return psi


@dataclass(frozen=True)
class PceSurrogate:
    """Coefficients ``u[t, r]`` of basis ``index_set[r]`` at step ``t``."""

    s: int
    p: int
    index_set: np.ndarray
    coefficients: np.ndarray
    gammas: np.ndarray

    def __post_init__(self):
        R = basis_size(self.s, self.p)
        if self.index_set.shape != (R, self.s):
            raise ValueError("index set does not match (s, p)")
        if self.coefficients.ndim != 2 or self.coefficients.shape[1] != R:
            raise ValueError("coefficients must have shape (T, R)")
        if not np.all(np.isfinite(self.coefficients)):
            raise ValueError("non-finite coefficients")
        if np.any(self.gammas <= 0):
            raise ValueError("gammas must be positive")

    @property
    def steps(self) -> int:
        return self.coefficients.shape[0]

    @property
    def size(self) -> int:
        return len(self.index_set)

    def evaluate(self, xi) -> np.ndarray:
        """Responses at all steps, shape ``(n, T)`` (or ``(T,)`` for one point)."""
        xi = np.asarray(xi, dtype=float)
        out = basis_matrix(self.index_set, xi) @ self.coefficients.T
        return out[0] if xi.ndim == 1 else out

    def truncate(self, p: int) -> "PceSurrogate":
        """Restriction to total degree ``p`` (a prefix in graded order)."""
        R = basis_size(self.s, p)
        return PceSurrogate(self.s, p, self.index_set[:R], self.coefficients[:, :R], self.gammas[:R])


def eval_surrogate(surrogate: PceSurrogate, xi, t: int):
    xi = np.asarray(xi, dtype=float)
    if xi.shape[-1] != surrogate.s:
        raise ValueError("dimension mismatch")
    out = basis_matrix(surrogate.index_set, xi) @ surrogate.coefficients[t]
    return float(out[0]) if xi.ndim == 1 else out


def analytic_mean(surrogate: PceSurrogate, t=None):
    u = surrogate.coefficients[:, 0]
    return u if t is None else float(u[t])


def analytic_std(surrogate: PceSurrogate, t=None):
    u = surrogate.coefficients[:, 1:]
    var = (u * u) @ surrogate.gammas[1:]
    std = np.sqrt(var)
    return std if t is None else float(std[t])


def write_surrogate_csv(surrogate: PceSurrogate, path) -> None:
    header = ["t"] + [f"alpha_{k + 1}" for k in range(surrogate.s)] + ["u_alpha", "gamma_alpha"]
    rows = []
    for t in range(surrogate.steps):
        for r, alpha in enumerate(surrogate.index_set):
            rows.append([t + 1, *(int(a) for a in alpha), surrogate.coefficients[t, r], surrogate.gammas[r]])
    write_csv(path, header, rows)


def read_surrogate_csv(path) -> PceSurrogate:
    header, rows = read_csv(path)
    s = len(header) - 3
    data = np.array(rows, dtype=float)
    T = int(data[:, 0].max())
    R = len(data) // T
    index_set = data[:R, 1:1 + s].astype(np.int64)
    p = int(index_set.sum(axis=1).max())
    coefficients = data[:, 1 + s].reshape(T, R)
    return PceSurrogate(s, p, index_set, coefficients, data[:R, 2 + s].copy())
