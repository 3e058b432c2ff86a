"""Verification suite configuration."""

from __future__ import annotations

import hashlib
import json
import logging
from pathlib import Path
from typing import Literal

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from clifford_workbench.algebra.multivector import AlgebraSignature
from clifford_workbench.config.conventions import SignConvention
from clifford_workbench.config.defaults import (
    BERGMAN_CALIBRATION_REFINEMENT,
    DEFAULT_REFINEMENTS,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    DEFAULT_STEP,
    DEFAULT_TOLERANCES,
    FD_CONSTANT,
    RUNTIME_BUDGET_SECONDS,
)
from clifford_workbench.errors import ConfigError
from clifford_workbench.mass.terms import MassTerm

logger = logging.getLogger(__name__)

SUITE_ORDER: tuple[str, ...] = (
    "algebra",
    "operators",
    "transform",
    "taylor",
    "differentiability",
    "cauchy",
    "meanvalue",
    "bergman",
)


class SuiteConfig(BaseModel):
    """Everything that determines a verification run."""

    model_config = ConfigDict(populate_by_name=True, frozen=True)

    n: int = 2
    mass: str = Field(default="0.5", alias="lambda")
    sign_convention: Literal["ledger", "printed"] = "ledger"
    h: float = DEFAULT_STEP
    fd_constant: float = FD_CONSTANT
    refinements: list[int] = Field(default_factory=lambda: list(DEFAULT_REFINEMENTS))
    bergman_refinement: int = 5
    calibration_refinement: int = BERGMAN_CALIBRATION_REFINEMENT
    tolerances: dict[str, float] = Field(default_factory=dict)
    seed: int = DEFAULT_SEED
    samples: int = DEFAULT_SAMPLES
    generator_fields: int = 10
    runtime_budget_seconds: float = RUNTIME_BUDGET_SECONDS

    @field_validator("n")
    @classmethod
    def _check_n(cls, v: int) -> int:
        if not 1 <= v <= 6:
            raise ValueError(f"n must be between 1 and 6, got {v}")
        return v

    @field_validator("mass", mode="before")
    @classmethod
    def _mass_as_text(cls, v):
        # YAML reads "lambda: 0.5" as a float
        if isinstance(v, (int, float)) and not isinstance(v, bool):
            return repr(float(v))
        return v

    @field_validator("h", "fd_constant", "runtime_budget_seconds")
    @classmethod
    def _check_positive(cls, v: float) -> float:
        if not v > 0:
            raise ValueError(f"must be positive, got {v}")
        return v

    @field_validator("samples", "generator_fields", "bergman_refinement", "calibration_refinement")
    @classmethod
    def _check_count(cls, v: int) -> int:
        if v < 1:
            raise ValueError(f"must be at least 1, got {v}")
        return v

    @field_validator("refinements")
    @classmethod
    def _check_refinements(cls, v: list[int]) -> list[int]:
        if not v:
            raise ValueError("at least one refinement level is required")
        if v[0] < 1:
            raise ValueError("refinement levels start at 1")
        if any(b <= a for a, b in zip(v, v[1:])):
            raise ValueError(f"refinement levels must be strictly increasing, got {v}")
        return v

    @field_validator("tolerances")
    @classmethod
    def _check_tolerances(cls, v: dict[str, float]) -> dict[str, float]:
        unknown = sorted(set(v) - set(DEFAULT_TOLERANCES))
        if unknown:
            raise ValueError(f"unknown tolerance names {unknown}; known: {sorted(DEFAULT_TOLERANCES)}")
        bad = {k: t for k, t in v.items() if not t > 0}
        if bad:
            raise ValueError(f"tolerances must be positive: {bad}")
        return dict(sorted(v.items()))

    @model_validator(mode="after")
    def _check_mass(self) -> SuiteConfig:
        try:
            MassTerm.parse(self.mass, AlgebraSignature(self.n))
        except ConfigError as exc:
            raise ValueError(str(exc)) from exc
        return self

    @property
    def convention(self) -> SignConvention:
        return SignConvention(self.sign_convention)

    @property
    def signature(self) -> AlgebraSignature:
        return AlgebraSignature(self.n)

    def mass_term(self) -> MassTerm:
        return MassTerm.parse(self.mass, self.signature)

    def tolerance(self, name: str) -> float:
        if name in self.tolerances:
            return self.tolerances[name]
        return DEFAULT_TOLERANCES[name]

    def fd_tolerance(self, h: float | None = None) -> float:
        """C * h**2 for plain finite-difference residuals."""
        h = self.h if h is None else h
        return self.fd_constant * h * h

    def with_updates(self, **changes) -> SuiteConfig:
        """Copy with validated changes; tolerance overrides merge into the existing ones."""
        data = self.model_dump(by_alias=True)
        overrides = changes.pop("tolerances", None)
        data.update({k if k != "mass" else "lambda": v for k, v in changes.items() if v is not None})
        if overrides:
            data["tolerances"] = {**data["tolerances"], **overrides}
        return load_config(data)

    def digest(self) -> str:
        """Short stable hash of the configuration."""
        canonical = json.dumps(self.model_dump(mode="json", by_alias=True), sort_keys=True)
        return hashlib.md5(canonical.encode()).hexdigest()[:12]

    @classmethod
    def from_yaml(cls, path: str | Path) -> SuiteConfig:
        try:
            with open(path) as f:
                data = yaml.safe_load(f) or {}
        except (OSError, yaml.YAMLError) as exc:
            raise ConfigError(f"cannot read {path}: {exc}") from exc
        if not isinstance(data, dict):
            raise ConfigError(f"{path}: expected a mapping at the top level")
        return load_config(data)

    def to_yaml(self, path: str | Path) -> None:
        with open(path, "w") as f:
            yaml.dump(self.model_dump(mode="json", by_alias=True), f, default_flow_style=False)


def load_config(data: dict) -> SuiteConfig:
    """Validate a raw mapping, turning pydantic errors into ConfigError."""
    try:
        return SuiteConfig.model_validate(data)
    except ValidationError as exc:
        problems = "; ".join(
            f"{'.'.join(str(part) for part in err['loc']) or 'config'}: {err['msg']}" for err in exc.errors()
        )
        raise ConfigError(problems) from exc
