"""Computation behind each endpoint.

The CLI calls these functions directly (in-process thin client); the
FastAPI app wires them to routes.  Both sides therefore share one
contract: the pydantic models in .models.
"""

from __future__ import annotations

import numpy as np

from .. import __version__, acceptance
from ..funcspec import DomainError, build_function, parse_spec
from ..grids import GridConfig
from ..norm_estimator import norm_pre_schwarzian, norm_schwarzian
from ..reports import render_csv
from ..robertson import (
    ConditionViolation,
    SpiralAlpha,
    delta,
    extremal_b,
    extremal_f0,
    extremal_fz0p,
    extremal_p,
    extremal_value,
    membership_min,
    pointwise_bound,
    pre_schwarzian_norm_bound,
    s0,
    schwarzian_norm_bound,
)
from .models import (
    BoundRequest,
    BoundResponse,
    CriterionOutcome,
    ExtremalRequest,
    ExtremalResponse,
    NormRequest,
    NormResponse,
    SweepRequest,
    SweepResponse,
    SweepRow,
    VerifyRequest,
    VerifyResponse,
    validate_bounded_alpha,
)

SWEEP_CSV_HEADER = [
    "alpha",
    "regime",
    "delta",
    "S_norm_bound",
    "P_norm_bound",
    "numeric_S_norm_of_f0",
    "numeric_sharpness_ratio",
]


def run_bound(req: BoundRequest) -> BoundResponse:
    a = SpiralAlpha(validate_bounded_alpha(req.alpha))
    notes = [
        "schwarzian_norm_bound: sharp sup of (1-|z|^2)^2 |S_f| over the class",
        "pre_schwarzian_norm_bound: sharp sup of (1-|z|^2) |f''/f'|, always 4 cos(alpha)",
        "delta: radius where the pointwise bound switches branch (large regime only)",
    ]
    pw = None
    if req.z is not None:
        pw = pointwise_bound(a, req.z)
        notes.append(f"pointwise_bound: sharp bound for |S_f| on |z| = {req.z!r}")
    return BoundResponse(
        alpha=a.alpha,
        regime=a.regime,
        delta=delta(a),
        schwarzian_norm_bound=schwarzian_norm_bound(a),
        pre_schwarzian_norm_bound=pre_schwarzian_norm_bound(a),
        z=req.z,
        pointwise_bound=pw,
        notes=notes,
    )


def run_norm(req: NormRequest) -> NormResponse:
    spec = parse_spec(req.spec)
    f = build_function(spec)
    cfg = req.grid_config()
    result = norm_pre_schwarzian(f, cfg) if req.kind == "pre" else norm_schwarzian(f, cfg)
    bound = None
    alpha = spec.alpha
    if alpha is not None:
        bound = (pre_schwarzian_norm_bound(alpha) if req.kind == "pre"
                 else schwarzian_norm_bound(alpha))
    ratio = result.value / bound if bound else None
    notes = ["value: grid supremum of the weighted modulus; a lower bound for the norm"]
    if bound is not None:
        notes.append("bound: sharp class-wide norm bound at this alpha; ratio = value/bound")
    if result.truncation_limited:
        notes.append("scan capped at |z| = 0.9: series truncation untrusted beyond")
    return NormResponse(
        spec=spec.canonical(),
        kind=req.kind,
        value=result.value,
        argmax_re=result.argmax.real,
        argmax_im=result.argmax.imag,
        boundary_attained=result.boundary_attained,
        truncation_limited=result.truncation_limited,
        evaluations=result.evaluations,
        bound=bound,
        ratio=ratio,
        notes=notes,
    )


def run_extremal(req: ExtremalRequest) -> ExtremalResponse:
    a = SpiralAlpha(validate_bounded_alpha(req.alpha))
    z0 = req.z0
    try:
        f = extremal_fz0p(a, z0)
        value = extremal_value(a, z0)
    except ConditionViolation as exc:
        raise DomainError(str(exc)) from exc
    return ExtremalResponse(
        alpha=a.alpha,
        z0=z0,
        p=extremal_p(a),
        b=extremal_b(a, z0),
        s0=s0(a, abs(z0)),
        omega_at_z0_abs=abs(f.omega.value(z0)),
        attained_value=value,
        pointwise_bound=pointwise_bound(a, abs(z0)),
        membership_min=membership_min(a, f),
        notes=[
            "attained_value: |S_f(z0)| of the constructed member, equal to the pointwise bound",
            "omega_at_z0_abs: |omega(z0)|, by construction the profile peak s0(|z0|)",
        ],
    )


def run_sweep(req: SweepRequest) -> SweepResponse:
    lo = validate_bounded_alpha(req.alpha_min)
    hi = validate_bounded_alpha(req.alpha_max)
    rows = []
    for alpha in np.linspace(lo, hi, req.steps):
        a = SpiralAlpha(float(alpha))
        s_bound = schwarzian_norm_bound(a)
        numeric = norm_schwarzian(extremal_f0(a)).value
        rows.append(SweepRow(
            alpha=a.alpha,
            regime=a.regime,
            delta=delta(a),
            s_norm_bound=s_bound,
            p_norm_bound=pre_schwarzian_norm_bound(a),
            numeric_s_norm_of_f0=numeric,
            numeric_sharpness_ratio=numeric / s_bound,
        ))
    csv_text = render_csv(SWEEP_CSV_HEADER, [
        [r.alpha, r.regime, r.delta, r.s_norm_bound, r.p_norm_bound,
         r.numeric_s_norm_of_f0, r.numeric_sharpness_ratio]
        for r in rows
    ])
    return SweepResponse(rows=rows, csv=csv_text)


def run_verify(req: VerifyRequest) -> VerifyResponse:
    report = acceptance.run_all(seed=req.seed)
    cfg = GridConfig()
    return VerifyResponse(
        passed=report.passed,
        seed=report.seed,
        version=__version__,
        grid={"n_radii": cfg.n_radii, "n_angles": cfg.n_angles, "r_max": cfg.r_max,
              "refine_iters": cfg.refine_iters, "refine_tol": cfg.refine_tol},
        criteria=[CriterionOutcome(name=r.name, passed=r.passed, detail=r.detail)
                  for r in report.results],
    )
