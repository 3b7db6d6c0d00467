"""Study configuration (JSON) and the two built-in presets.

``exp1``: only ``E`` random (lognormal 210 GPa / 21 GPa), 80-step ramp to
``2.8e-3``, degrees 1, 3, 5 on grids of 9, 17, 19, 33, 35 points.

``exp2``: all four parameters lognormal, 300-step load/unload cycle with peak
``2.8e-3``, degrees 1, 5 on grids of 201 and 3065 points.

Presets lock the marginals and the load path; everything else may be
overridden.  Unknown keys are rejected.
"""
from __future__ import annotations

import json
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .material import LoadPath
from .stochastic import PARAMETER_NAMES, MarginalSpec, StochasticInput, table1_input, table3_input

DEFAULT_MC_SAMPLES = 100_000
MAX_MC_SAMPLES = 1_000_000


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid")


class MarginalConfig(_Strict):
    kind: Literal["constant", "lognormal"]
    value: float | None = None
    mu_q: float | None = None
    sigma_q: float | None = None

    @model_validator(mode="after")
    def _check(self):
        MarginalSpec(self.kind, self.value, self.mu_q, self.sigma_q)
        return self


class PathConfig(_Strict):
    steps: int = Field(gt=0)
    eps_max: float = Field(ge=0)
    unload: bool = False


class PceConfig(_Strict):
    degrees: list[int] = Field(min_length=1)

    @model_validator(mode="after")
    def _check(self):
        if any(p < 0 for p in self.degrees):
            raise ValueError("degrees must be >= 0")
        return self


class GridConfig(_Strict):
    levels: list[int] = Field(min_length=1)

    @model_validator(mode="after")
    def _check(self):
        if any(not 1 <= lv <= 25 for lv in self.levels):
            raise ValueError("grid levels must be in [1, 25]")
        return self


class McConfig(_Strict):
    n: int = Field(default=DEFAULT_MC_SAMPLES, ge=2, le=MAX_MC_SAMPLES)
    seed: int = Field(default=0, ge=0)


def _marginals_of(inp: StochasticInput) -> dict[str, MarginalConfig]:
    return {n: MarginalConfig(kind=m.kind, value=m.value, mu_q=m.mu_q, sigma_q=m.sigma_q)
            for n, m in inp.marginals}


PRESETS = {
    "exp1": dict(marginals=_marginals_of(table1_input()),
                 path=PathConfig(steps=80, eps_max=2.8e-3, unload=False),
                 pce=PceConfig(degrees=[1, 3, 5]),
                 grid=GridConfig(levels=[5, 9, 10, 17, 18])),
    "exp2": dict(marginals=_marginals_of(table3_input()),
                 path=PathConfig(steps=300, eps_max=2.8e-3, unload=True),
                 pce=PceConfig(degrees=[1, 5]),
                 grid=GridConfig(levels=[5, 10])),
}


class StudyConfig(_Strict):
    experiment: Literal["exp1", "exp2", "custom"] = "custom"
    marginals: dict[str, MarginalConfig] | None = None
    path: PathConfig | None = None
    pce: PceConfig | None = None
    grid: GridConfig | None = None
    mc: McConfig = McConfig()
    outputs: str | None = None

    @model_validator(mode="after")
    def _apply_preset(self):
        if self.experiment != "custom":
            preset = PRESETS[self.experiment]
            for key in ("marginals", "path"):
                given = getattr(self, key)
                if given is not None and given != preset[key]:
                    raise ValueError(f"preset {self.experiment} locks {key!r}")
                setattr(self, key, preset[key])
            for key in ("pce", "grid"):
                if getattr(self, key) is None:
                    setattr(self, key, preset[key])
        missing = [k for k in ("marginals", "path", "pce", "grid") if getattr(self, k) is None]
        if missing:
            raise ValueError(f"custom study needs {missing}")
        if sorted(self.marginals) != sorted(PARAMETER_NAMES):
            raise ValueError(f"marginals must define exactly {PARAMETER_NAMES}")
        if not any(m.kind == "lognormal" for m in self.marginals.values()):
            raise ValueError("at least one marginal must be random")
        return self

    def stochastic_input(self) -> StochasticInput:
        return StochasticInput(tuple(
            (n, MarginalSpec(self.marginals[n].kind, self.marginals[n].value,
                             self.marginals[n].mu_q, self.marginals[n].sigma_q))
            for n in PARAMETER_NAMES))

    def load_path(self) -> LoadPath:
        return LoadPath.from_spec(self.path.steps, self.path.eps_max, self.path.unload)

    def echo(self) -> dict:
        return self.model_dump(mode="json")


def load_config(path) -> StudyConfig:
    with open(path) as fh:
        return StudyConfig.model_validate(json.load(fh))


def json_schema() -> dict:
    return StudyConfig.model_json_schema()
