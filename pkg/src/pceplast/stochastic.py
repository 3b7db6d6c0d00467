"""Uncertain material parameters and reproducible standard-normal sampling.

Lognormal marginals are parameterized by their target mean ``mu_q`` and
standard deviation ``sigma_q`` and realized as ``exp(mu_g + sigma_g * xi)``
with ``xi ~ N(0, 1)``.

Sampling generator
------------------
Deviate ``k`` of sample ``j`` (in an ``s``-dimensional study) has counter
``c = j * s + k``.  The 64-bit word is the SplitMix64 output for state
``key + (c + 1) * 0x9E3779B97F4A7C15`` where ``key`` is the SplitMix64 mix of
the user seed.  The top 53 bits give ``u = (b + 0.5) / 2**53`` in (0, 1) and
the deviate is ``Phi^{-1}(u)`` (Cephes ``ndtri``).  Every sample is a pure
function of ``(seed, j)``, whatever the chunking or worker count.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import ndtri

from .material import MaterialParams

PARAMETER_NAMES = ("E", "nu", "sigma_y0", "H")

_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_M1 = np.uint64(0xBF58476D1CE4E5B9)
_M2 = np.uint64(0x94D049BB133111EB)


@dataclass(frozen=True)
class LognormalMap:
    mu_g: float
    sigma_g: float

    def __call__(self, xi):
        return np.exp(self.mu_g + self.sigma_g * np.asarray(xi, dtype=float))

    @property
    def median(self) -> float:
        return float(np.exp(self.mu_g))


def lognormal_from_moments(mu_q: float, sigma_q: float) -> LognormalMap:
    """Gaussian-space parameters reproducing a lognormal mean and std."""
    if not (mu_q > 0 and sigma_q > 0):
        raise ValueError(f"lognormal moments must be positive, got mu={mu_q}, std={sigma_q}")
    cv = sigma_q / mu_q
    sigma_g = np.sqrt(np.log1p(cv * cv))
    return LognormalMap(float(np.log(mu_q) - 0.5 * sigma_g * sigma_g), float(sigma_g))


@dataclass(frozen=True)
class MarginalSpec:
    kind: str
    value: float | None = None
    mu_q: float | None = None
    sigma_q: float | None = None

    def __post_init__(self):
        if self.kind == "constant":
            if self.value is None:
                raise ValueError("constant marginal needs a value")
        elif self.kind == "lognormal":
            if self.mu_q is None or self.sigma_q is None or self.mu_q <= 0 or self.sigma_q <= 0:
                raise ValueError("lognormal marginal needs mu_q > 0 and sigma_q > 0")
        else:
            raise ValueError(f"unknown marginal kind {self.kind!r}")

    @classmethod
    def constant(cls, value: float) -> "MarginalSpec":
        return cls("constant", value=float(value))

    @classmethod
    def lognormal(cls, mu_q: float, sigma_q: float) -> "MarginalSpec":
        return cls("lognormal", mu_q=float(mu_q), sigma_q=float(sigma_q))

    @property
    def is_random(self) -> bool:
        return self.kind == "lognormal"

    @property
    def mean(self) -> float:
        return self.mu_q if self.is_random else self.value

    def to_map(self) -> LognormalMap:
        return lognormal_from_moments(self.mu_q, self.sigma_q)


@dataclass(frozen=True)
class StochasticInput:
    """Ordered marginals; random ones get ``xi`` coordinates in listed order."""

    marginals: tuple[tuple[str, MarginalSpec], ...]

    def __post_init__(self):
        names = [n for n, _ in self.marginals]
        if sorted(names) != sorted(PARAMETER_NAMES):
            raise ValueError(f"marginals must cover exactly {PARAMETER_NAMES}, got {names}")

    @property
    def s(self) -> int:
        return sum(m.is_random for _, m in self.marginals)

    @property
    def random_names(self) -> list[str]:
        return [n for n, m in self.marginals if m.is_random]

    def marginal(self, name: str) -> MarginalSpec:
        return dict(self.marginals)[name]

    def mean_params(self) -> MaterialParams:
        return MaterialParams(**{n: m.mean for n, m in self.marginals})


def table1_input() -> StochasticInput:
    """Only E is random (lognormal, mean 210 GPa, std 21 GPa)."""
    return StochasticInput((
        ("E", MarginalSpec.lognormal(210e9, 21e9)),
        ("nu", MarginalSpec.constant(0.3)),
        ("sigma_y0", MarginalSpec.constant(235e6)),
        ("H", MarginalSpec.constant(2.1e9)),
    ))


def table3_input() -> StochasticInput:
    """All four parameters lognormal with 10 % (nu: 5 %) coefficient of variation."""
    return StochasticInput((
        ("E", MarginalSpec.lognormal(210e9, 21e9)),
        ("nu", MarginalSpec.lognormal(0.3, 0.015)),
        ("sigma_y0", MarginalSpec.lognormal(235e6, 23.5e6)),
        ("H", MarginalSpec.lognormal(21e8, 2.1e8)),
    ))


def realize_parameters(inp: StochasticInput, xi) -> MaterialParams:
    """Map ``xi`` of shape ``(s,)`` or ``(n, s)`` to material parameters."""
    xi = np.asarray(xi, dtype=float)
    if xi.shape[-1:] != (inp.s,):
        raise ValueError(f"xi has trailing dimension {xi.shape[-1:]}, expected {inp.s}")
    batch = xi.shape[:-1]
    values = {}
    k = 0
    for name, m in inp.marginals:
        if m.is_random:
            values[name] = m.to_map()(xi[..., k])
            k += 1
        else:
            values[name] = np.full(batch, m.value) if batch else m.value
    if not batch:
        values = {n: float(v) for n, v in values.items()}
    return MaterialParams(**values)


def _splitmix64(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> np.uint64(30))) * _M1
    z = (z ^ (z >> np.uint64(27))) * _M2
    return z ^ (z >> np.uint64(31))


def _seed_key(seed: int) -> np.uint64:
    return _splitmix64(np.array([seed & 0xFFFFFFFFFFFFFFFF], dtype=np.uint64) + _GAMMA)[0]


def uniform_stream(seed: int, start: int, stop: int) -> np.ndarray:
    """Uniforms in (0, 1) for counters ``start .. stop-1``."""
    key = _seed_key(seed)
    c = np.arange(start, stop, dtype=np.uint64) + np.uint64(1)
    with np.errstate(over="ignore"):
        bits = _splitmix64(key + c * _GAMMA)
    return ((bits >> np.uint64(11)).astype(np.float64) + 0.5) * 2.0 ** -53


def sample_standard_normals(s: int, n: int, seed: int, start: int = 0) -> np.ndarray:
    """Samples ``start .. start+n-1`` as an ``(n, s)`` array."""
    if s < 0 or n < 0:
        raise ValueError("need s >= 0 and n >= 0")
    u = uniform_stream(seed, start * s, (start + n) * s)
    return ndtri(u).reshape(n, s)
