"""Request/response contracts shared by the HTTP service and the CLI.

Angles accept either decimal radians or exact "pi/k" fractions; they
resolve to floats at validation time so handlers only ever see numbers.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field, field_validator

from ..funcspec import DomainError, parse_angle
from ..grids import GridConfig, R_MAX_DEFAULT


def _resolve_angle(v) -> float:
    if isinstance(v, str):
        try:
            v = parse_angle(v)
        except ValueError as exc:
            raise ValueError(f"bad angle literal {v!r}: {exc}") from exc
    return float(v)


class BoundRequest(BaseModel):
    alpha: float | str
    z: float | None = Field(default=None, ge=0.0, lt=1.0)

    @field_validator("alpha")
    @classmethod
    def _alpha(cls, v):
        return _resolve_angle(v)


class BoundResponse(BaseModel):
    alpha: float
    regime: str
    delta: float | None
    schwarzian_norm_bound: float
    pre_schwarzian_norm_bound: float
    z: float | None = None
    pointwise_bound: float | None = None
    notes: list[str] = []


class NormRequest(BaseModel):
    spec: str
    kind: Literal["pre", "schwarzian"]
    radii: int = Field(default=64, ge=2)
    angles: int = Field(default=256, ge=2)
    rmax: float = Field(default=R_MAX_DEFAULT, gt=0.0, lt=1.0)
    refine_iters: int = Field(default=40, ge=0)

    def grid_config(self) -> GridConfig:
        return GridConfig(n_radii=self.radii, n_angles=self.angles, r_max=self.rmax,
                          refine_iters=self.refine_iters)


class NormResponse(BaseModel):
    spec: str
    kind: str
    value: float
    argmax_re: float
    argmax_im: float
    boundary_attained: bool
    truncation_limited: bool
    evaluations: int
    bound: float | None = None
    ratio: float | None = None
    notes: list[str] = []


class ExtremalRequest(BaseModel):
    alpha: float | str
    z0: float

    @field_validator("alpha")
    @classmethod
    def _alpha(cls, v):
        return _resolve_angle(v)

    @field_validator("z0")
    @classmethod
    def _z0(cls, v):
        if not -1.0 < v < 1.0:
            raise ValueError(f"z0 must lie in (-1, 1), got {v}")
        return float(v)


class ExtremalResponse(BaseModel):
    alpha: float
    z0: float
    p: int
    b: float
    s0: float
    omega_at_z0_abs: float
    attained_value: float
    pointwise_bound: float
    membership_min: float
    notes: list[str] = []


class SweepRequest(BaseModel):
    alpha_min: float | str
    alpha_max: float | str
    steps: int = Field(ge=1, le=10_000)

    @field_validator("alpha_min", "alpha_max")
    @classmethod
    def _alpha(cls, v):
        return _resolve_angle(v)


class SweepRow(BaseModel):
    alpha: float
    regime: str
    delta: float | None
    s_norm_bound: float
    p_norm_bound: float
    numeric_s_norm_of_f0: float
    numeric_sharpness_ratio: float


class SweepResponse(BaseModel):
    rows: list[SweepRow]
    csv: str


class VerifyRequest(BaseModel):
    seed: int | None = None


class CriterionOutcome(BaseModel):
    name: str
    passed: bool
    detail: str


class VerifyResponse(BaseModel):
    passed: bool
    seed: int
    version: str
    grid: dict
    criteria: list[CriterionOutcome]


def validate_bounded_alpha(alpha: float) -> float:
    """Final guard shared by handlers; pydantic cannot see pi/2 itself."""
    import math

    if not -math.pi / 2 < alpha < math.pi / 2:
        raise DomainError(f"alpha must lie in (-pi/2, pi/2), got {alpha!r}")
    return alpha
