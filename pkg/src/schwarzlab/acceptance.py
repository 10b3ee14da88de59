"""End-to-end verification of every sharp bound and construction.

Each criterion checks one closed-form claim against an independent
numerical route (grid suprema, brute-force scans, random sampling) at a
fixed tolerance.  Randomized criteria draw from a generator seeded by
the SCHWARZIAN_LAB_SEED environment variable (default 0), so the suite
is reproducible run to run.
"""

from __future__ import annotations

import math
import os
import time
from dataclasses import dataclass

import numpy as np

from . import robertson as rc
from .disk_functions import Blaschke2, BlaschkeFix0, Rotation
from .norm_estimator import norm_pre_schwarzian, norm_schwarzian
from .robertson import (
    RobertsonFunction,
    delta,
    dieudonne_report,
    extremal_f0,
    extremal_fz0p,
    extremal_value,
    g_profile,
    h_poly,
    membership_min,
    s0,
    schwarzian,
    schwarzian_norm_bound,
    schwarzian_via_omega,
)

SEED_ENV_VAR = "SCHWARZIAN_LAB_SEED"
MEMBERSHIP_FLOOR = -1e-9


def seed_from_env() -> int:
    return int(os.environ.get(SEED_ENV_VAR, "0"))


@dataclass(frozen=True)
class CriterionResult:
    name: str
    passed: bool
    detail: str
    runtime_s: float
    runtime_limit_s: float | None = None


@dataclass(frozen=True)
class AcceptanceReport:
    seed: int
    results: tuple

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)


def _sample_omega(rng) -> object:
    """Random Schwarz function: rotation, degree-2 Blaschke with real b,
    or a Blaschke product fixing 0 of degree up to 3."""
    kind = int(rng.integers(0, 3))
    if kind == 0:
        return Rotation(rng.uniform(0.0, 2.0 * math.pi))
    if kind == 1:
        p = -1 if rng.uniform() < 0.5 else 1
        return Blaschke2(p, rng.uniform(-0.95, 0.95))
    n_zeros = int(rng.integers(1, 3))
    zeros = [rng.uniform(0.0, 0.8) * np.exp(1j * rng.uniform(0.0, 2.0 * math.pi))
             for _ in range(n_zeros)]
    return BlaschkeFix0(zeros, theta=rng.uniform(0.0, 2.0 * math.pi))


# -- criteria ----------------------------------------------------------


def check_convex_sharpness(rng, members):
    """alpha = 0: the extremal member's weighted Schwarzian at z0 is
    exactly the convex-class constant 2."""
    worst = 0.0
    for z0 in (0.3, 0.5, 0.7):
        f = extremal_fz0p(0.0, z0)
        members.append(f)
        got = (1.0 - z0 * z0) ** 2 * abs(schwarzian_via_omega(0.0, f.omega, z0))
        worst = max(worst, abs(got - 2.0))
    return worst <= 1e-9, f"max |(1-z0^2)^2 |S(z0)| - 2| = {worst:.3e} (tol 1e-9)"


def check_large_alpha_norm_sharpness(rng, members):
    """|alpha| > pi/6: the numeric Schwarzian norm of f0 reaches at
    least 99% of 8 cos sin and never exceeds it."""
    detail = []
    ok = True
    for alpha in (math.pi / 4, math.pi / 3, 1.2):
        f0 = extremal_f0(alpha)
        members.append(f0)
        bound = 8.0 * math.cos(alpha) * abs(math.sin(alpha))
        value = norm_schwarzian(f0).value
        ok = ok and value >= 0.99 * bound and value <= bound + 1e-6
        detail.append(f"alpha={alpha:.4g}: {value:.6f} vs bound {bound:.6f}")
    return ok, "; ".join(detail)


def check_small_alpha_norm_bound(rng, members):
    """|alpha| <= pi/6: the extremal family approaches the norm bound
    2 cos/(1-sin|a|) as z0 -> 1, and numeric norms never exceed it."""
    ok = True
    detail = []
    for alpha in (0.0, 0.2, math.pi / 6):
        bound = schwarzian_norm_bound(alpha)
        approach = max((1.0 - z0 * z0) ** 2 * extremal_value(alpha, z0)
                       for z0 in (0.9, 0.99))
        ok = ok and approach >= 0.99 * bound
        for z0 in (0.9, 0.99):
            f = extremal_fz0p(alpha, z0)
            members.append(f)
            value = norm_schwarzian(f).value
            ok = ok and value <= bound + 1e-6
        detail.append(f"alpha={alpha:.4g}: approach {approach:.6f} of bound {bound:.6f}")
    return ok, "; ".join(detail)


def check_pre_schwarzian_norm(rng, members):
    """The numeric pre-Schwarzian norm of f0 equals 4 cos within 0.1%."""
    worst = 0.0
    for alpha in (0.0, math.pi / 4, math.pi / 3):
        f0 = extremal_f0(alpha)
        members.append(f0)
        target = 4.0 * math.cos(alpha)
        value = norm_pre_schwarzian(f0).value
        worst = max(worst, abs(value - target) / target)
    return worst <= 1e-3, f"max relative gap {worst:.3e} (tol 1e-3)"


def check_pointwise_domination(rng, members):
    """10^4 random (alpha, omega, z): |S_f(z)| never exceeds the
    pointwise bound at |z| by more than 1e-9."""
    violations = 0
    worst = -math.inf
    for _ in range(10_000):
        alpha = rng.uniform(-1.5, 1.5)
        omega = _sample_omega(rng)
        r = rng.uniform(1e-3, 0.95)
        z = r * np.exp(1j * rng.uniform(0.0, 2.0 * math.pi))
        excess = abs(schwarzian_via_omega(alpha, omega, complex(z))) - rc.pointwise_bound(alpha, r)
        worst = max(worst, excess)
        if excess > 1e-9:
            violations += 1
    return violations == 0, f"violations {violations}/10000, worst excess {worst:.3e}"


def check_branch_continuity(rng, members):
    """Both bound branches agree across the switch radius and across the
    pi/6 regime edge."""
    worst = 0.0
    for alpha in (math.pi / 4, math.pi / 3):
        d = delta(alpha)
        worst = max(worst, abs(rc.pointwise_bound(alpha, d - 1e-9)
                               - rc.pointwise_bound(alpha, d + 1e-9)))
    worst = max(worst, abs(schwarzian_norm_bound(math.pi / 6 - 1e-9)
                           - schwarzian_norm_bound(math.pi / 6 + 1e-9)))
    return worst <= 1e-6, f"max branch jump {worst:.3e} (tol 1e-6)"


def check_critical_point_oracle(rng, members):
    """A brute-force scan of the bound profile peaks at s0 when the
    switch polynomial is positive, and at the right endpoint otherwise."""
    step = 1e-4
    worst = 0.0
    for _ in range(100):
        alpha = rng.uniform(-1.5, 1.5)
        r = rng.uniform(0.05, 0.95)
        grid = np.arange(0.0, r, step)
        grid = np.append(grid, r)
        vals = [g_profile(alpha, r, float(s)) for s in grid]
        s_hat = float(grid[int(np.argmax(vals))])
        target = s0(alpha, r) if h_poly(alpha, r) > 0.0 else r
        worst = max(worst, abs(s_hat - target))
    return worst <= 2e-4, f"max |argmax - predicted| = {worst:.3e} (tol 2e-4)"


def check_dieudonne_equality(rng, members):
    """Derivative variability: equality (to 1e-10) for degree-2 Blaschke
    products fixing 0, strict slack for degree-3 products."""
    worst_eq = 0.0
    for _ in range(50):
        p = -1 if rng.uniform() < 0.5 else 1
        omega = Blaschke2(p, rng.uniform(-0.9, 0.9))
        z0 = rng.uniform(0.1, 0.9) * np.exp(1j * rng.uniform(0.0, 2.0 * math.pi))
        worst_eq = max(worst_eq, abs(dieudonne_report(omega, complex(z0)).slack))
    min_slack = math.inf
    for _ in range(50):
        zeros = [rng.uniform(0.0, 0.8) * np.exp(1j * rng.uniform(0.0, 2.0 * math.pi))
                 for _ in range(2)]
        omega = BlaschkeFix0(zeros, theta=rng.uniform(0.0, 2.0 * math.pi))
        z0 = rng.uniform(0.15, 0.85) * np.exp(1j * rng.uniform(0.0, 2.0 * math.pi))
        min_slack = min(min_slack, dieudonne_report(omega, complex(z0)).slack)
    ok = worst_eq <= 1e-10 and min_slack > 0.0
    return ok, f"degree-2 worst |slack| {worst_eq:.3e}; degree-3 min slack {min_slack:.3e}"


def check_series_closed_form_consistency(rng, members):
    """Order-128 series jets reproduce the closed-form Schwarzian to
    1e-8 inside |z| <= 0.7."""
    worst = 0.0
    for _ in range(20):
        alpha = rng.uniform(-1.5, 1.5)
        if rng.uniform() < 0.5:
            omega = Rotation(rng.uniform(0.0, 2.0 * math.pi))
        else:
            p = -1 if rng.uniform() < 0.5 else 1
            omega = Blaschke2(p, rng.uniform(-0.9, 0.9))
        f = rc.robertson_from_omega(alpha, omega, 128)
        members.append(f)
        series_view = f.as_series_function()
        for _ in range(100):
            r = rng.uniform(1e-3, rc.TIGHT_SERIES_R_MAX)
            z = complex(r * np.exp(1j * rng.uniform(0.0, 2.0 * math.pi)))
            diff = abs(schwarzian(series_view, z) - schwarzian_via_omega(alpha, omega, z))
            worst = max(worst, diff)
    return worst <= 1e-8, f"max series/closed-form gap {worst:.3e} (tol 1e-8)"


def check_membership(rng, members):
    """Every member constructed while running the suite certifies
    Re{e^{i alpha}(1 + z f''/f')} > -1e-9 on the default grid."""
    if not members:
        # standalone invocation: check a representative trio
        members = [
            extremal_f0(math.pi / 4),
            extremal_fz0p(0.0, 0.5),
            rc.robertson_from_omega(0.3, Blaschke2(-1, 0.4)),
        ]
    worst = math.inf
    for f in members:
        worst = min(worst, membership_min(f.alpha, f))
    ok = worst > MEMBERSHIP_FLOOR
    return ok, f"{len(members)} members, min membership {worst:.3e} (floor -1e-9)"


CRITERIA = (
    ("convex_sharpness", check_convex_sharpness, 1.0),
    ("large_alpha_norm_sharpness", check_large_alpha_norm_sharpness, 5.0),
    ("small_alpha_norm_bound", check_small_alpha_norm_bound, None),
    ("pre_schwarzian_norm", check_pre_schwarzian_norm, 2.0),
    ("pointwise_domination", check_pointwise_domination, 5.0),
    ("branch_continuity", check_branch_continuity, None),
    ("critical_point_oracle", check_critical_point_oracle, None),
    ("dieudonne_equality", check_dieudonne_equality, None),
    ("series_closed_form_consistency", check_series_closed_form_consistency, 10.0),
    ("membership", check_membership, None),
)


def criterion_names() -> list[str]:
    return [name for name, _, _ in CRITERIA]


def run_criterion(name: str, seed: int | None = None,
                  members: list | None = None) -> CriterionResult:
    """Run one criterion in isolation (fresh rng, own member list)."""
    for cname, fn, limit in CRITERIA:
        if cname == name:
            rng = np.random.default_rng(seed_from_env() if seed is None else seed)
            mem: list[RobertsonFunction] = [] if members is None else members
            t0 = time.perf_counter()
            passed, detail = fn(rng, mem)
            dt = time.perf_counter() - t0
            if limit is not None and dt >= limit:
                passed = False
                detail += f"; runtime {dt:.2f}s exceeded {limit:.0f}s"
            return CriterionResult(name, passed, detail, dt, limit)
    raise KeyError(f"unknown criterion {name!r}")


def run_all(seed: int | None = None) -> AcceptanceReport:
    """Run the full suite; members accumulate across criteria so the
    membership criterion sees everything the run constructed."""
    seed = seed_from_env() if seed is None else seed
    members: list[RobertsonFunction] = []
    results = []
    for name, _, _ in CRITERIA:
        results.append(run_criterion(name, seed=seed, members=members))
    return AcceptanceReport(seed=seed, results=tuple(results))
