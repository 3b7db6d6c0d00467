"""Small-strain J2 plasticity with bilinear isotropic hardening at a material point.

Tensors are stored in Voigt order ``11, 22, 33, 12, 23, 31`` with *tensorial*
shear strains (``eps_12``, not ``gamma_12 = 2 eps_12``).  The factor 2 is
applied when strains meet the stiffness: :func:`elastic_stiffness` returns the
usual engineering-shear matrix, so ``stress = D @ voigt_engineering(strain)``.

Every function accepts parameters as scalars or as equally shaped arrays; in
the latter case all samples are integrated simultaneously, each one exactly as
it would be on its own (only elementwise arithmetic is used per sample).
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

SQRT3 = np.sqrt(3.0)

# relative stress-residual tolerance of the lateral Newton loop (times sigma_y0)
LATERAL_RTOL = 1e-10
MAX_NEWTON_ITER = 50
_MAX_HALVINGS = 12


class InvalidInputError(ValueError):
    pass


class ConvergenceError(RuntimeError):
    """Lateral-stress Newton loop failed; ``residual`` is the last max |sigma_22|."""

    def __init__(self, message, residual=None, step=None):
        super().__init__(message)
        self.residual = residual
        self.step = step


@dataclass(frozen=True)
class MaterialParams:
    E: float | np.ndarray
    nu: float | np.ndarray
    sigma_y0: float | np.ndarray
    H: float | np.ndarray

    def __post_init__(self):
        E, nu, sy, H = (np.asarray(v, dtype=float) for v in (self.E, self.nu, self.sigma_y0, self.H))
        if not all(np.all(np.isfinite(v)) for v in (E, nu, sy, H)):
            raise InvalidInputError("material parameters must be finite")
        if np.any(E <= 0):
            raise InvalidInputError("E must be > 0")
        if np.any((nu <= 0) | (nu >= 0.5)):
            raise InvalidInputError("nu must lie in (0, 0.5)")
        if np.any(sy <= 0):
            raise InvalidInputError("sigma_y0 must be > 0")
        if np.any(H < 0):
            raise InvalidInputError("H must be >= 0")

    @property
    def shape(self) -> tuple[int, ...]:
        return np.broadcast_shapes(*(np.shape(v) for v in (self.E, self.nu, self.sigma_y0, self.H)))

    @property
    def shear_modulus(self):
        return np.asarray(self.E) / (2.0 * (1.0 + np.asarray(self.nu)))

    @property
    def bulk_modulus(self):
        return np.asarray(self.E) / (3.0 * (1.0 - 2.0 * np.asarray(self.nu)))

    @property
    def lame_lambda(self):
        E, nu = np.asarray(self.E), np.asarray(self.nu)
        return E * nu / ((1.0 + nu) * (1.0 - 2.0 * nu))

    def yield_stress(self, eps_p_eq):
        return np.asarray(self.sigma_y0) + np.asarray(self.H) * eps_p_eq


@dataclass(frozen=True)
class PlasticState:
    """Converged state at the end of a step.

    ``strain``, ``stress`` and ``plastic_strain`` have shape ``(..., 6)``;
    ``eps_p_eq`` (alias ``kappa``) is the accumulated equivalent plastic strain.
    """

    strain: np.ndarray
    stress: np.ndarray
    plastic_strain: np.ndarray
    eps_p_eq: np.ndarray

    @classmethod
    def virgin(cls, shape=()) -> "PlasticState":
        z = np.zeros(tuple(shape) + (6,))
        return cls(z, z.copy(), z.copy(), np.zeros(tuple(shape)))

    @property
    def kappa(self):
        return self.eps_p_eq


@dataclass(frozen=True)
class LoadPath:
    """Prescribed axial strain ``eps11[t]`` at the end of each uniform step."""

    eps11: np.ndarray

    def __post_init__(self):
        eps = np.asarray(self.eps11, dtype=float)
        if eps.ndim != 1 or len(eps) == 0:
            raise InvalidInputError("eps11 must be a non-empty 1D sequence")
        if not np.all(np.isfinite(eps)):
            raise InvalidInputError("eps11 must be finite")
        if eps[0] < 0:
            raise InvalidInputError("eps11[0] must be >= 0")
        object.__setattr__(self, "eps11", eps)

    @property
    def steps(self) -> int:
        return len(self.eps11)

    @classmethod
    def ramp(cls, steps: int, eps_max: float) -> "LoadPath":
        k = np.arange(1, steps + 1)
        return cls(eps_max * k / steps)

    @classmethod
    def load_unload(cls, steps: int, eps_max: float) -> "LoadPath":
        """Linear loading to ``eps_max`` in ``steps // 2`` steps, then back to zero."""
        up = steps // 2
        down = steps - up
        k = np.arange(1, up + 1)
        j = np.arange(1, down + 1)
        return cls(np.concatenate([eps_max * k / up, eps_max * (down - j) / down]))

    @classmethod
    def from_spec(cls, steps: int, eps_max: float, unload: bool = False) -> "LoadPath":
        return cls.load_unload(steps, eps_max) if unload else cls.ramp(steps, eps_max)


def experiment1_path() -> LoadPath:
    """80 uniform steps, 0 -> 2.8e-3 (first yield near step 32 at mean E)."""
    return LoadPath.ramp(80, 2.8e-3)


def experiment2_path() -> LoadPath:
    """0 -> 2.8e-3 in 150 steps and back to 0 in 150 steps."""
    return LoadPath.load_unload(300, 2.8e-3)


@dataclass(frozen=True)
class ResponseSeries:
    """Axial stress per step; shape ``(T,)`` or ``(n, T)`` for batched runs."""

    sigma11: np.ndarray = field(repr=False)


def elastic_stiffness(params: MaterialParams) -> np.ndarray:
    """Isotropic 6x6 stiffness acting on engineering-shear Voigt strains."""
    lam = float(params.lame_lambda)
    G = float(params.shear_modulus)
    D = np.zeros((6, 6))
    D[:3, :3] = lam
    D[np.arange(3), np.arange(3)] += 2.0 * G
    D[np.arange(3, 6), np.arange(3, 6)] = G
    return D


def voigt_engineering(strain: np.ndarray) -> np.ndarray:
    out = np.array(strain, dtype=float, copy=True)
    out[..., 3:] *= 2.0
    return out


def deviator(t: np.ndarray) -> np.ndarray:
    p = (t[..., 0] + t[..., 1] + t[..., 2]) / 3.0
    out = t.copy()
    out[..., :3] -= p[..., None]
    return out


def tensor_norm(t: np.ndarray) -> np.ndarray:
    """Frobenius norm of a symmetric tensor in tensorial Voigt storage."""
    return np.sqrt(t[..., 0] ** 2 + t[..., 1] ** 2 + t[..., 2] ** 2
                   + 2.0 * (t[..., 3] ** 2 + t[..., 4] ** 2 + t[..., 5] ** 2))


def von_mises(stress: np.ndarray) -> np.ndarray:
    return np.sqrt(1.5) * tensor_norm(deviator(stress))


def yield_function(stress: np.ndarray, sigma_y) -> np.ndarray:
    """``sqrt(J2) - sigma_y / sqrt(3)``."""
    return tensor_norm(deviator(stress)) / np.sqrt(2.0) - sigma_y / SQRT3


def _return_map(params, state, dstrain):
    """Radial return; also returns the pieces of the consistent tangent."""
    dstrain = np.asarray(dstrain, dtype=float)
    G = params.shear_modulus
    K = params.bulk_modulus
    lam = params.lame_lambda
    H = np.asarray(params.H, dtype=float)

    tr = dstrain[..., 0] + dstrain[..., 1] + dstrain[..., 2]
    trial = state.stress + 2.0 * G[..., None] * dstrain
    trial[..., :3] += (lam * tr)[..., None]

    s_tr = deviator(trial)
    norm_tr = tensor_norm(s_tr)
    q_tr = np.sqrt(1.5) * norm_tr
    sy_n = params.yield_stress(state.eps_p_eq)
    f_tr = q_tr - sy_n
    plastic = f_tr > 0.0

    safe_q = np.where(plastic, q_tr, 1.0)
    dgamma = np.where(plastic, f_tr / (3.0 * G + H), 0.0)
    # radial scaling of the deviator; 1 where elastic
    beta = 1.0 - 3.0 * G * dgamma / safe_q
    n = s_tr / np.where(plastic, norm_tr, 1.0)[..., None]

    stress = trial - ((1.0 - beta) * np.where(plastic, 1.0, 0.0))[..., None] * s_tr
    dep = (1.5 * dgamma / safe_q)[..., None] * s_tr
    new = PlasticState(
        strain=state.strain + dstrain,
        stress=stress,
        plastic_strain=state.plastic_strain + dep,
        eps_p_eq=state.eps_p_eq + dgamma,
    )
    gbar = np.where(plastic, 3.0 * G / (3.0 * G + H) - (1.0 - beta), 0.0)
    return new, (K, G, beta, gbar, n)


def radial_return(params: MaterialParams, state: PlasticState, strain_increment) -> PlasticState:
    """Elastic predictor / radial plastic corrector for one strain increment.

    The consistency increment ``dgamma = (q_trial - sigma_y(kappa_n)) / (3G + H)``
    is exact for linear hardening; ``eps_p_eq`` grows by ``dgamma``.
    """
    d = np.asarray(strain_increment, dtype=float)
    if not np.all(np.isfinite(d)) or not np.all(np.isfinite(state.stress)):
        raise InvalidInputError("non-finite strain increment or stress")
    if d.shape[-1:] != (6,):
        raise InvalidInputError("strain increment must have 6 Voigt components")
    new, _ = _return_map(params, state, d)
    return new


def _lateral_residual(params, state, eps11, e):
    """State, sigma_22 and d sigma_22 / d e for lateral strain ``e = eps22 = eps33``."""
    d = np.zeros(np.shape(e) + (6,))
    d[..., 0] = eps11 - state.strain[..., 0]
    d[..., 1] = e - state.strain[..., 1]
    d[..., 2] = e - state.strain[..., 2]
    new, (K, G, beta, gbar, n) = _return_map(params, state, d)
    # tangent applied to d eps = (0, 1, 1, 0, 0, 0)
    slope = 2.0 * K + 2.0 * G * beta / 3.0 - 2.0 * G * gbar * n[..., 1] * (n[..., 1] + n[..., 2])
    return new, new.stress[..., 1], slope


def uniaxial_stress_step(params: MaterialParams, state: PlasticState, eps11_target,
                         rtol: float = LATERAL_RTOL, max_iter: int = MAX_NEWTON_ITER) -> PlasticState:
    """Advance to axial strain ``eps11_target`` with zero lateral stress.

    Damped Newton on the common lateral strain, starting from the previous
    converged value; a step is halved while it increases ``|sigma_22|``.
    """
    e = np.array(state.strain[..., 1], dtype=float, copy=True)
    tol = rtol * np.asarray(params.sigma_y0, dtype=float)
    new, r, slope = _lateral_residual(params, state, eps11_target, e)
    active = np.abs(r) > tol
    it = 0
    while np.any(active):
        if it >= max_iter:
            res = float(np.max(np.abs(np.where(active, r, 0.0))))
            raise ConvergenceError(f"lateral Newton did not converge in {max_iter} iterations "
                                   f"(residual {res:.3e} Pa)", residual=res)
        de = np.where(active, -r / slope, 0.0)
        trial_e = e + de
        cand, r_new, slope_new = _lateral_residual(params, state, eps11_target, trial_e)
        worse = active & (np.abs(r_new) > np.abs(r))
        halvings = 0
        while np.any(worse) and halvings < _MAX_HALVINGS:
            de = np.where(worse, 0.5 * de, de)
            trial_e = e + de
            cand, r_new, slope_new = _lateral_residual(params, state, eps11_target, trial_e)
            worse = active & (np.abs(r_new) > np.abs(r))
            halvings += 1
        e, new, r, slope = trial_e, cand, r_new, slope_new
        active = np.abs(r) > tol
        it += 1
    return new


def run_uniaxial(params: MaterialParams, path: LoadPath) -> ResponseSeries:
    """Drive the material point along ``path``; batched if params are arrays."""
    shape = params.shape
    state = PlasticState.virgin(shape)
    out = np.empty(shape + (path.steps,))
    for t, eps in enumerate(path.eps11):
        try:
            state = uniaxial_stress_step(params, state, eps)
        except ConvergenceError as exc:
            raise ConvergenceError(f"step {t}: {exc}", residual=exc.residual, step=t) from exc
        out[..., t] = state.stress[..., 0]
    return ResponseSeries(out)


def run_uniaxial_states(params: MaterialParams, path: LoadPath) -> list[PlasticState]:
    """Like :func:`run_uniaxial` but keeps every converged state."""
    state = PlasticState.virgin(params.shape)
    states = []
    for eps in path.eps11:
        state = uniaxial_stress_step(params, state, eps)
        states.append(state)
    return states


__all__ = [
    "ConvergenceError", "InvalidInputError", "LoadPath", "MaterialParams", "PlasticState",
    "ResponseSeries", "elastic_stiffness", "experiment1_path", "experiment2_path",
    "radial_return", "run_uniaxial", "run_uniaxial_states",
    "uniaxial_stress_step", "von_mises", "yield_function",
]
