"""Hyperbolic sup-norm estimation over the unit disk.

Estimates sup (1-|z|^2)^k |F(z)| by a coarse polar scan followed by
golden-section refinement, alternating between radius and angle around
the incumbent.  The reported value is the maximum over every point
actually evaluated, so it is a true lower bound for the supremum and is
monotone in the refinement budget.

The suprema in this package typically live at |z| -> 1; the estimator
scans up to r_max = 1 - 1e-4 and reports whether the maximizer sits in
the outermost grid cell, rather than extrapolating past the scan.
Series-backed functions are scanned only up to |z| = 0.9, where an
order-128 truncation is still trustworthy, and the result is flagged.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace

import numpy as np

from .disk_functions import DiskFunction, SeriesFunction
from .errors import SchwarzlabError
from .grids import GridConfig, chebyshev_radii, uniform_angles
from .power_series import TaylorSeries
from .robertson import (
    RobertsonFunction,
    SERIES_SCAN_R_MAX,
    pre_schwarzian,
    schwarzian,
)

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
_MAX_REFINE_ROUNDS = 10


class EvaluationFailure(SchwarzlabError):
    """The scanned map raised or returned a non-finite value."""

    def __init__(self, z: complex, reason):
        self.z = z
        self.reason = reason
        super().__init__(f"evaluation failed at z = {z!r}: {reason}")


@dataclass(frozen=True)
class NormResult:
    """Supremum estimate of a weighted modulus over the disk.

    value is the weighted modulus at argmax and never exceeds the true
    supremum; boundary_attained marks an argmax in the outermost radial
    cell; truncation_limited marks a scan capped at the series-trust
    radius instead of r_max.
    """

    value: float
    argmax: complex
    boundary_attained: bool
    evaluations: int
    truncation_limited: bool = False


def weighted_sup(F, weight_power: int, cfg: GridConfig | None = None,
                 seeds=()) -> NormResult:
    """Estimate sup over |z| <= r_max of (1-|z|^2)^weight_power |F(z)|.

    seeds are extra candidate points (e.g. a known extremal point)
    evaluated alongside the coarse grid before refinement.  For a fixed
    cfg the result is deterministic.
    """
    cfg = cfg or GridConfig()
    if weight_power not in (1, 2):
        raise ValueError(f"weight_power must be 1 or 2, got {weight_power}")
    state = {"evals": 0}

    def wmod(r: float, theta: float) -> float:
        z = complex(r * math.cos(theta), r * math.sin(theta))
        state["evals"] += 1
        try:
            v = complex(F(z))
        except Exception as exc:
            raise EvaluationFailure(z, exc) from exc
        if not (math.isfinite(v.real) and math.isfinite(v.imag)):
            raise EvaluationFailure(z, f"non-finite value {v!r}")
        return (1.0 - r * r) ** weight_power * abs(v)

    radii = chebyshev_radii(cfg.n_radii, cfg.r_max)
    angles = uniform_angles(cfg.n_angles)

    best_v = -math.inf
    best_r = 0.0
    best_t = 0.0
    for r in radii:
        for t in angles:
            v = wmod(float(r), float(t))
            if v > best_v:
                best_v, best_r, best_t = v, float(r), float(t)
    for z in seeds:
        z = complex(z)
        r, t = abs(z), cmath.phase(z)
        if r > cfg.r_max:
            continue
        v = wmod(r, t)
        if v > best_v:
            best_v, best_r, best_t = v, r, t

    def cell_half_width(r: float) -> float:
        k = int(np.argmin(np.abs(radii - r)))
        lo = float(radii[max(k - 1, 0)])
        hi = float(radii[min(k + 1, len(radii) - 1)])
        return max(hi - r, r - lo, cfg.refine_tol)

    w_r = None
    w_t = 2.0 * math.pi / cfg.n_angles
    for _ in range(_MAX_REFINE_ROUNDS):
        before = best_v
        # Re-scan the whole radial slice at the incumbent angle: the
        # radial maximizer can jump across cells when the angle moves
        # (narrow boundary ridges), and a merely local bracket would
        # crawl one cell per round.
        prev_r = best_r
        for r in radii:
            v = wmod(float(r), best_t)
            if v > best_v:
                best_v, best_r = v, float(r)
        if w_r is None or abs(best_r - prev_r) > w_r:
            w_r = cell_half_width(best_r)
        x, v, width = _golden_max(lambda r: wmod(r, best_t),
                                  max(0.0, best_r - w_r), min(cfg.r_max, best_r + w_r),
                                  cfg.refine_iters, cfg.refine_tol)
        if v > best_v:
            best_v, best_r = v, x
        # Brackets shrink across rounds to what the previous search
        # resolved, so positional precision compounds instead of being
        # re-derived from the full cell every time.
        w_r = max(2.0 * width, 1e-13)
        x, v, width = _golden_max(lambda t: wmod(best_r, t), best_t - w_t,
                                  best_t + w_t, cfg.refine_iters, cfg.refine_tol)
        if v > best_v:
            best_v, best_t = v, x
        w_t = max(2.0 * width, 1e-13)
        if best_v - before <= cfg.refine_tol:
            break

    return NormResult(
        value=best_v,
        argmax=complex(best_r * math.cos(best_t), best_r * math.sin(best_t)),
        boundary_attained=bool(best_r >= radii[-2]),
        evaluations=state["evals"],
    )


def _golden_max(g, lo: float, hi: float, iters: int, tol: float):
    """Golden-section maximization on [lo, hi]; endpoints included.

    Returns the best (x, g(x)) among every probe plus the final bracket
    width, so a larger budget can only improve the result and callers
    can shrink follow-up brackets to what was actually resolved.
    """
    best_x, best_v = lo, g(lo)
    v = g(hi)
    if v > best_v:
        best_x, best_v = hi, v
    c = hi - _INV_PHI * (hi - lo)
    d = lo + _INV_PHI * (hi - lo)
    gc, gd = g(c), g(d)
    for x, v in ((c, gc), (d, gd)):
        if v > best_v:
            best_x, best_v = x, v
    for _ in range(iters):
        if hi - lo < tol:
            break
        if gc > gd:
            hi, d, gd = d, c, gc
            c = hi - _INV_PHI * (hi - lo)
            gc = g(c)
            if gc > best_v:
                best_x, best_v = c, gc
        else:
            lo, c, gc = c, d, gd
            d = lo + _INV_PHI * (hi - lo)
            gd = g(d)
            if gd > best_v:
                best_x, best_v = d, gd
    return best_x, best_v, hi - lo


def _seeds_for(f: RobertsonFunction):
    """Known extremal points worth probing for a constructed member."""
    if f.provenance.startswith("extremal_fz0p") and f.z0 is not None:
        return (complex(f.z0),)
    return ()


def norm_pre_schwarzian(f, cfg: GridConfig | None = None) -> NormResult:
    """sup (1-|z|^2) |f''/f'|, via the generator when f carries one."""
    return _norm_of(f, cfg, pre_schwarzian, weight_power=1)


def norm_schwarzian(f, cfg: GridConfig | None = None) -> NormResult:
    """sup (1-|z|^2)^2 |S_f|, via the generator when f carries one."""
    return _norm_of(f, cfg, schwarzian, weight_power=2)


def _norm_of(f, cfg: GridConfig | None, operator, weight_power: int) -> NormResult:
    cfg = cfg or GridConfig()
    if isinstance(f, TaylorSeries):
        f = SeriesFunction(f)
    if not isinstance(f, DiskFunction):
        raise TypeError(f"expected a DiskFunction or TaylorSeries, got {type(f)!r}")
    F = lambda z: operator(f, z)
    if isinstance(f, RobertsonFunction):
        return weighted_sup(F, weight_power, cfg, seeds=_seeds_for(f))
    if isinstance(f, SeriesFunction):
        capped = cfg.with_r_max(min(cfg.r_max, SERIES_SCAN_R_MAX))
        return replace(weighted_sup(F, weight_power, capped), truncation_limited=True)
    return weighted_sup(F, weight_power, cfg)
