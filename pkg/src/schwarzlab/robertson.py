"""Robertson-class maps and their sharp derivative bounds.

For a spiral parameter alpha in (-pi/2, pi/2), the class consists of
normalized analytic f on the unit disk with

    Re{ e^{i*alpha} (1 + z f''(z)/f'(z)) } > 0.

Every member is generated by a Schwarz function omega through

    f''(z)/f'(z) = 2 e^{-i*alpha} cos(alpha) * q(z) / (1 - omega(z)),

with q = omega/z, which integrates to f' = exp(int P), f = int f'.
Substituting into S_f = (f''/f')' - (f''/f')^2/2 and eliminating the
division by z^2 via q gives the closed Schwarzian

    S_f(z) = 2 e^{-i*alpha} cos(alpha)
             * [ (omega'(z) - q(z))/z + i e^{-i*alpha} sin(alpha) q(z)^2 ]
             / (1 - omega(z))^2.

The modulus of S_f obeys a sharp two-branch pointwise bound that
switches at the radius delta = (1 - sin|alpha|)/sin|alpha| once
|alpha| > pi/6, and the induced hyperbolic norms obey

    ||S_f|| <= 2 cos(alpha)/(1 - sin|alpha|)   for |alpha| <= pi/6,
    ||S_f|| <= 8 cos(alpha) sin|alpha|         for |alpha| >  pi/6,
    ||P_f|| <= 4 cos(alpha),

each attained by explicit members built from degree-2 Blaschke products
or from omega = z.  This module houses all of it: the constructor, the
derivative operators, the bound formulas, the profile maximization
internals, the extremal factories, and the derivative-variability
(Dieudonne) report.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .disk_functions import (
    Blaschke2,
    BlaschkeFix0,
    DiskFunction,
    Rotation,
    SchwarzFunction,
    SeriesFunction,
)
from .errors import OutsideDisk, SchwarzlabError
from .grids import GridConfig, polar_points
from .power_series import DEFAULT_ORDER, TaylorSeries

SMALL_REGIME_EDGE = math.pi / 6
# Closed-form S_f divides by z once; below this radius double-precision
# cancellation in omega' - q exceeds the 1e-10 accuracy target, so the
# series path takes over.
NEAR_ORIGIN_RADIUS = 1e-3
# Truncated order-128 series are trusted on |z| <= 0.9; tight (1e-8)
# comparisons stay inside |z| <= 0.7.
SERIES_SCAN_R_MAX = 0.9
TIGHT_SERIES_R_MAX = 0.7
MEMBERSHIP_TOL = -1e-9
DERIVATIVE_FLOOR = 1e-14


class VanishingDerivative(SchwarzlabError):
    """f' vanished (to working precision) where a quotient needs it."""


class ConditionViolation(SchwarzlabError):
    """(alpha, z0) admits no extremal construction: outside (C1)/(C2)."""


class ZeroPoint(SchwarzlabError):
    """The derivative-variability report needs z0 != 0."""


class SpiralAlpha:
    """Spiral parameter with cached trigonometry and regime tag.

    regime is "small" when |alpha| <= pi/6 and "large" beyond; the
    pointwise Schwarzian bound is single-branch in the small regime.
    """

    __slots__ = ("alpha", "sin_a", "cos_a", "sin_abs")

    def __init__(self, alpha: float):
        alpha = float(alpha)
        if not -math.pi / 2 < alpha < math.pi / 2:
            raise ValueError(f"alpha must lie in (-pi/2, pi/2), got {alpha}")
        self.alpha = alpha
        self.sin_a = math.sin(alpha)
        self.cos_a = math.cos(alpha)
        self.sin_abs = abs(self.sin_a)

    @property
    def regime(self) -> str:
        return "small" if abs(self.alpha) <= SMALL_REGIME_EDGE else "large"

    def __repr__(self) -> str:
        return f"SpiralAlpha({self.alpha!r})"

    def __eq__(self, other) -> bool:
        return isinstance(other, SpiralAlpha) and self.alpha == other.alpha

    def __hash__(self) -> int:
        return hash(("SpiralAlpha", self.alpha))


def _as_alpha(alpha) -> SpiralAlpha:
    return alpha if isinstance(alpha, SpiralAlpha) else SpiralAlpha(alpha)


class RobertsonFunction(SeriesFunction):
    """A class member f, carrying both its series and its generator.

    The truncated Taylor series backs value/jet evaluation; the pair
    (alpha, omega) backs exact closed-form pre-Schwarzian and Schwarzian
    evaluation all the way to the boundary.
    """

    def __init__(self, alpha: SpiralAlpha, omega: SchwarzFunction,
                 f_series: TaylorSeries, provenance: str = "from_omega",
                 z0: float | None = None):
        super().__init__(f_series)
        self.alpha = alpha
        self.omega = omega
        self.provenance = provenance
        self.z0 = z0

    @property
    def f_series(self) -> TaylorSeries:
        return self.series

    def as_series_function(self) -> SeriesFunction:
        """The plain series-backed view, with no generator attached."""
        return SeriesFunction(self.series)

    def pre_schwarzian_closed(self, z: complex) -> complex:
        return pre_schwarzian_via_omega(self.alpha, self.omega, z)

    def schwarzian_closed(self, z: complex) -> complex:
        z = complex(z)
        if abs(z) < NEAR_ORIGIN_RADIUS:
            return _schwarzian_from_jet(self.jet(z))
        return _schwarzian_closed(self.alpha, self.omega, z)


# -- construction -----------------------------------------------------


def robertson_from_omega(alpha, omega: SchwarzFunction,
                         order: int = DEFAULT_ORDER,
                         provenance: str = "from_omega",
                         z0: float | None = None) -> RobertsonFunction:
    """Build the class member generated by omega, as an order-N series.

    f' = exp(int P) with P = 2 e^{-i*alpha} cos(alpha) q/(1 - omega),
    then f = int f'; the result is normalized (f(0)=0, f'(0)=1) by
    construction.
    """
    a = _as_alpha(alpha)
    q = omega.q_taylor(order)
    w = omega.taylor(order)
    mu = 2.0 * cmath.exp(-1j * a.alpha) * a.cos_a
    p_series = (q * mu) / (TaylorSeries.one(order) - w)
    f_prime = p_series.integrate().exp()
    f = f_prime.integrate().truncate(order)
    return RobertsonFunction(a, omega, f, provenance=provenance, z0=z0)


# -- derivative operators ---------------------------------------------


def _require_nonvanishing(d1: complex, z: complex) -> None:
    if abs(d1) < DERIVATIVE_FLOOR:
        raise VanishingDerivative(f"|f'({z!r})| = {abs(d1):.3g} below {DERIVATIVE_FLOOR}")


def _as_disk_function(f) -> DiskFunction:
    return SeriesFunction(f) if isinstance(f, TaylorSeries) else f


def pre_schwarzian(f, z: complex) -> complex:
    """f''(z)/f'(z).

    Robertson members evaluate through their generator (exact up to the
    boundary); everything else differentiates its jet.
    """
    if isinstance(f, RobertsonFunction):
        return f.pre_schwarzian_closed(z)
    f = _as_disk_function(f)
    _, d1, d2, _ = f.jet(z)
    _require_nonvanishing(d1, z)
    return d2 / d1


def _schwarzian_from_jet(jet) -> complex:
    _, d1, d2, d3 = jet
    p = d2 / d1
    return d3 / d1 - 1.5 * p * p


def schwarzian(f, z: complex) -> complex:
    """S_f(z) = f'''/f' - (3/2)(f''/f')^2.

    Same dispatch rule as pre_schwarzian: Robertson members use their
    generator, series and closed-form functions use their jet.
    """
    if isinstance(f, RobertsonFunction):
        return f.schwarzian_closed(z)
    f = _as_disk_function(f)
    jet = f.jet(z)
    _require_nonvanishing(jet[1], z)
    return _schwarzian_from_jet(jet)


def pre_schwarzian_via_omega(alpha, omega: SchwarzFunction, z: complex) -> complex:
    """Closed form 2 e^{-i*alpha} cos(alpha) q(z)/(1 - omega(z))."""
    a = _as_alpha(alpha)
    z = complex(z)
    if abs(z) >= 1.0:
        raise OutsideDisk(z)
    w = omega.value(z)
    return 2.0 * cmath.exp(-1j * a.alpha) * a.cos_a * omega.q(z) / (1.0 - w)


def _schwarzian_closed(a: SpiralAlpha, omega: SchwarzFunction, z: complex) -> complex:
    w, dw, _, _ = omega.jet(z)
    qv = omega.q(z)
    ea = cmath.exp(-1j * a.alpha)
    one_m = 1.0 - w
    return 2.0 * ea * a.cos_a * ((dw - qv) / z + 1j * ea * a.sin_a * qv * qv) / (one_m * one_m)


def schwarzian_via_omega(alpha, omega: SchwarzFunction, z: complex,
                         order: int = DEFAULT_ORDER) -> complex:
    """S_f(z) for the member generated by (alpha, omega), in closed form.

    Below |z| = 1e-3 the closed form loses accuracy to cancellation in
    (omega' - q)/z, so the series jet takes over there.
    """
    a = _as_alpha(alpha)
    z = complex(z)
    if abs(z) >= 1.0:
        raise OutsideDisk(z)
    if abs(z) < NEAR_ORIGIN_RADIUS:
        rf = robertson_from_omega(a, omega, order)
        return _schwarzian_from_jet(rf.jet(z))
    return _schwarzian_closed(a, omega, z)


def membership_min(alpha, f, grid: GridConfig | None = None) -> float:
    """min over the grid of Re{e^{i*alpha}(1 + z f''(z)/f'(z))}.

    Certifies class membership when the result exceeds -1e-9 (exact
    members are strictly positive; grid minima of boundary-vanishing
    quantities may round just below 0).  Series-backed functions are
    scanned only up to |z| = 0.9, where their truncation is trusted.
    """
    a = _as_alpha(alpha)
    cfg = grid or GridConfig()
    f = _as_disk_function(f)
    cap = SERIES_SCAN_R_MAX if f.kind == "series-backed" else None
    zs = polar_points(cfg, r_cap=cap)
    phase = cmath.exp(1j * a.alpha)
    if isinstance(f, SeriesFunction):
        _, d1, d2, _ = f.jet_many(zs)
        vals = np.real(phase * (1.0 + zs * d2 / d1))
        return float(np.min(vals))
    worst = math.inf
    for z in zs:
        z = complex(z)
        _, d1, d2, _ = f.jet(z)
        _require_nonvanishing(d1, z)
        worst = min(worst, (phase * (1.0 + z * d2 / d1)).real)
    return worst


# -- bound formulas and maximization internals ------------------------


def delta(alpha) -> float | None:
    """Branch-switch radius (1 - sin|alpha|)/sin|alpha|, defined only
    in the large regime (it falls in (0,1) exactly when |alpha| > pi/6)."""
    a = _as_alpha(alpha)
    if abs(a.alpha) <= SMALL_REGIME_EDGE:
        return None
    return (1.0 - a.sin_abs) / a.sin_abs


def s0(alpha, r: float) -> float:
    """Critical point r^2/(1 - (1-r^2) sin|alpha|) of the bound profile."""
    a = _as_alpha(alpha)
    if not 0.0 <= r < 1.0:
        raise ValueError(f"r must lie in [0, 1), got {r}")
    return r * r / (1.0 - (1.0 - r * r) * a.sin_abs)


def h_poly(alpha, t: float) -> float:
    """sin|alpha| t^2 - t + 1 - sin|alpha|; roots are the branch radius
    delta and 1.  Positive iff the profile peaks strictly inside [0, r]."""
    a = _as_alpha(alpha)
    return a.sin_abs * t * t - t + 1.0 - a.sin_abs


def g_profile(alpha, r: float, s: float) -> float:
    """Profile whose maximum over s in [0, r] gives the pointwise
    Schwarzian bound divided by 2 cos(alpha); s stands for |omega(z)|."""
    a = _as_alpha(alpha)
    if not 0.0 < r < 1.0:
        raise ValueError(f"r must lie in (0, 1), got {r}")
    if not 0.0 <= s <= r:
        raise ValueError(f"s must lie in [0, r], got {s}")
    num = r * r - s * s * (1.0 - (1.0 - r * r) * a.sin_abs)
    return num / (r * r * (1.0 - r * r) * (1.0 - s) ** 2)


def pointwise_bound(alpha, r: float) -> float:
    """Sharp upper bound for |S_f(z)| at |z| = r over the whole class."""
    a = _as_alpha(alpha)
    if not 0.0 <= r < 1.0:
        raise ValueError(f"r must lie in [0, 1), got {r}")
    d = delta(a)
    if d is None or r < d:
        one_m_r2 = 1.0 - r * r
        return 2.0 * a.cos_a * (1.0 - one_m_r2 * a.sin_abs) / (one_m_r2**2 * (1.0 - a.sin_abs))
    return 2.0 * a.cos_a * a.sin_abs / (1.0 - r) ** 2


def schwarzian_norm_bound(alpha) -> float:
    """Sharp bound for sup (1-|z|^2)^2 |S_f| over the class."""
    a = _as_alpha(alpha)
    if abs(a.alpha) <= SMALL_REGIME_EDGE:
        return 2.0 * a.cos_a / (1.0 - a.sin_abs)
    return 8.0 * a.cos_a * a.sin_abs


def pre_schwarzian_norm_bound(alpha) -> float:
    """Sharp bound for sup (1-|z|^2) |P_f| over the class: 4 cos(alpha)."""
    return 4.0 * _as_alpha(alpha).cos_a


# -- extremal factories ------------------------------------------------


def extremal_p(alpha) -> int:
    """Blaschke sign for the extremal construction: -1 for alpha >= 0."""
    return -1 if _as_alpha(alpha).alpha >= 0.0 else 1


def _check_extremal_conditions(a: SpiralAlpha, z0: float) -> None:
    if not -1.0 < z0 < 1.0:
        raise ConditionViolation(f"z0 must be real in (-1, 1), got {z0}")
    d = delta(a)
    if d is not None and abs(z0) >= d:
        raise ConditionViolation(
            f"|alpha| > pi/6 requires |z0| < delta = {d:.6g}, got |z0| = {abs(z0):.6g}"
        )


def extremal_b(alpha, z0: float) -> float:
    """Blaschke parameter making |omega(z0)| hit the profile peak s0(|z0|)."""
    a = _as_alpha(alpha)
    z0 = float(z0)
    _check_extremal_conditions(a, z0)
    p = extremal_p(a)
    sin_a = a.sin_a
    num = z0 * (1.0 - p - sin_a + z0 * z0 * sin_a)
    den = -p + z0 * z0 - sin_a + z0 * z0 * sin_a
    # Nonzero on the admissible set: for p = -1 the denominator equals
    # (1 - sin a) + z0^2 (1 + sin a) >= 1 - sin a > 0; for p = +1 it
    # equals (1 + sin a)(z0^2 - 1) <= -(1 + sin a)(1 - z0^2) < 0.
    assert abs(den) > 0.0
    b = num / den
    assert -1.0 < b < 1.0
    return b


def extremal_fz0p(alpha, z0: float, order: int = DEFAULT_ORDER) -> RobertsonFunction:
    """Member whose Schwarzian modulus attains the pointwise bound at z0."""
    a = _as_alpha(alpha)
    p = extremal_p(a)
    b = extremal_b(a, z0)
    return robertson_from_omega(a, Blaschke2(p, b), order,
                                provenance="extremal_fz0p", z0=float(z0))


def extremal_value(alpha, z0: float) -> float:
    """The sharp value of |S_f(z0)| over the class: equals the pointwise
    bound at |z0| in its applicable branch.

    extremal_fz0p attains it exactly at alpha = 0 (and at z0 = 0);
    for other alpha the attaining member is extremal_fz0p_aligned.
    """
    a = _as_alpha(alpha)
    z0 = float(z0)
    _check_extremal_conditions(a, z0)
    one_m = 1.0 - z0 * z0
    return 2.0 * a.cos_a * (1.0 - one_m * a.sin_abs) / (one_m**2 * (1.0 - a.sin_abs))


def extremal_fz0p_aligned(alpha, z0: float, order: int = DEFAULT_ORDER) -> RobertsonFunction:
    """Member attaining the pointwise bound at z0 for every admissible
    (alpha, z0), via a rotated degree-2 Blaschke product fixing 0.

    Write omega = z*g with g a disk automorphism.  Equality in the
    bound chain needs three things at z0: omega(z0) equal to the real
    profile peak s0(|z0|), the derivative-variability equality (any
    degree-2 product fixing 0 has it), and phase alignment of the two
    Schwarzian numerator terms z0^2 g'(z0) and i e^{-i*alpha}
    sin(alpha) s0^2.  Taking g = tau_{-w0} o (e^{i*gamma} tau_{z0})
    with w0 = s0/z0 gives g(z0) = w0 and arg g'(z0) = gamma, so gamma
    must be the phase of i e^{-i*alpha} sin(alpha).  The real-parameter
    member from extremal_fz0p aligns only when sin(alpha) = 0.
    """
    a = _as_alpha(alpha)
    z0 = float(z0)
    _check_extremal_conditions(a, z0)
    if z0 == 0.0 or a.sin_a == 0.0:
        # second numerator term vanishes; no alignment needed
        return extremal_fz0p(a, z0, order)
    peak = s0(a, abs(z0))
    w0 = peak / z0
    gamma = math.pi / 2 - a.alpha + (0.0 if a.sin_a > 0 else math.pi)
    u = cmath.exp(1j * gamma)
    # zero of g: preimage of -w0 e^{-i*gamma} under tau_{z0}
    zeta = -w0 * u.conjugate()
    zero = (zeta + z0) / (1.0 + z0 * zeta)
    phase = w0 * (1.0 - zero.conjugate() * z0) / (z0 - zero)
    omega = BlaschkeFix0([zero], theta=cmath.phase(phase))
    assert abs(omega.value(z0) - peak) < 1e-10
    return robertson_from_omega(a, omega, order,
                                provenance="extremal_fz0p_aligned", z0=z0)


def extremal_f0(alpha, order: int = DEFAULT_ORDER) -> RobertsonFunction:
    """Member generated by omega = z; its Schwarzian is
    2i e^{-2i*alpha} sin(alpha) cos(alpha)/(1-z)^2, which saturates the
    norm bound in the large regime as z -> 1 on the real axis."""
    a = _as_alpha(alpha)
    return robertson_from_omega(a, Rotation(0.0), order, provenance="extremal_f0")


# -- derivative variability (Dieudonne region) -------------------------


@dataclass(frozen=True)
class DieudonneReport:
    """Distance of omega'(z0) from the center omega(z0)/z0 of its
    variability disk, against the disk radius; slack = rhs - lhs is
    nonnegative for Schwarz functions and zero exactly for degree-2
    Blaschke products fixing 0."""

    z0: complex
    lhs: float
    rhs: float

    @property
    def slack(self) -> float:
        return self.rhs - self.lhs


def dieudonne_report(omega: SchwarzFunction, z0: complex) -> DieudonneReport:
    z0 = complex(z0)
    if abs(z0) >= 1.0:
        raise OutsideDisk(z0)
    if z0 == 0:
        raise ZeroPoint("the variability report needs 0 < |z0| < 1")
    w, dw, _, _ = omega.jet(z0)
    lhs = abs(dw - omega.q(z0))
    r = abs(z0)
    rhs = (r * r - abs(w) ** 2) / (r * (1.0 - r * r))
    return DieudonneReport(z0=z0, lhs=float(lhs), rhs=float(rhs))
