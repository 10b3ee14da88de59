"""Evaluable analytic maps on the unit disk.

Every function here exposes a 4-jet ``(f, f', f'', f''')`` at interior
points.  Closed-form families differentiate their defining formulas;
series-backed functions differentiate the truncated polynomial.

Schwarz functions (self-maps fixing 0) additionally expose the analytic
quotient ``q(z) = omega(z)/z`` in factored closed form.  The factored
form matters: the derivative formulas downstream divide by z, and
evaluating ``omega(z)/z`` literally near 0 would throw away most of the
significand exactly where those formulas need it.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .errors import OutsideDisk, SchwarzlabError
from .grids import GridConfig, polar_points
from .power_series import TaylorSeries

Jet = tuple[complex, complex, complex, complex]


class BadParameter(SchwarzlabError):
    """A family parameter lies outside its admissible range."""


def jet_mul(f: Jet, g: Jet) -> Jet:
    """Leibniz product of two 4-jets."""
    return (
        f[0] * g[0],
        f[1] * g[0] + f[0] * g[1],
        f[2] * g[0] + 2.0 * f[1] * g[1] + f[0] * g[2],
        f[3] * g[0] + 3.0 * f[2] * g[1] + 3.0 * f[1] * g[2] + f[0] * g[3],
    )


def _check_inside(z: complex) -> complex:
    z = complex(z)
    if abs(z) >= 1.0:
        raise OutsideDisk(z)
    return z


class DiskFunction:
    """Analytic map on |z| < 1 with value and derivatives up to order 3."""

    kind = "closed-form"

    def jet(self, z: complex) -> Jet:
        return self._jet(_check_inside(z))

    def value(self, z: complex) -> complex:
        return self.jet(z)[0]

    def _jet(self, z: complex) -> Jet:
        raise NotImplementedError


class SeriesFunction(DiskFunction):
    """Disk function backed by a truncated Taylor polynomial."""

    kind = "series-backed"

    def __init__(self, series: TaylorSeries):
        self.series = series
        self._d = [series]
        for _ in range(3):
            self._d.append(self._d[-1].derivative())

    def _jet(self, z: complex) -> Jet:
        return tuple(d(z) for d in self._d)

    def jet_many(self, zs: np.ndarray) -> list[np.ndarray]:
        """Vectorized jet over an array of interior points."""
        zs = np.asarray(zs, dtype=np.complex128)
        if np.any(np.abs(zs) >= 1.0):
            bad = zs[np.abs(zs) >= 1.0][0]
            raise OutsideDisk(complex(bad))
        return [d.eval_many(zs) for d in self._d]

    def value(self, z: complex) -> complex:
        return self.series(_check_inside(z))


class MobiusFunction(DiskFunction):
    """f(z) = (a*z + b)/(c*z + d), restricted to the unit disk."""

    def __init__(self, a: complex, b: complex, c: complex, d: complex):
        self.a, self.b, self.c, self.d = map(complex, (a, b, c, d))
        self._det = self.a * self.d - self.b * self.c
        if self._det == 0:
            raise BadParameter("degenerate Mobius map: ad - bc = 0")

    def _jet(self, z: complex) -> Jet:
        u = self.c * z + self.d
        if u == 0:
            raise ZeroDivisionError(f"Mobius pole at z = {z!r}")
        f = (self.a * z + self.b) / u
        det = self._det
        return (f, det / u**2, -2.0 * self.c * det / u**3, 6.0 * self.c**2 * det / u**4)


def identity_map() -> "SchwarzFunction":
    """The map z -> z (rotation by angle 0)."""
    return Rotation(0.0)


class SchwarzFunction(DiskFunction):
    """Analytic self-map omega of the disk with omega(0) = 0.

    Concrete families provide the quotient q = omega/z in closed form,
    Taylor coefficients of q to any order, and a degree.
    """

    family = "schwarz"

    def q(self, z: complex) -> complex:
        raise NotImplementedError

    def q_taylor(self, order: int) -> TaylorSeries:
        raise NotImplementedError

    def taylor(self, order: int) -> TaylorSeries:
        """Taylor coefficients of omega itself: z * q(z)."""
        qc = self.q_taylor(order).coeffs
        w = np.zeros(order + 1, dtype=np.complex128)
        w[1:] = qc[: order]
        return TaylorSeries(w)


class Rotation(SchwarzFunction):
    """omega(z) = e^{i*theta} * z, the Schwarz-lemma equality case."""

    family = "rotation"
    degree = 1

    def __init__(self, theta: float):
        self.theta = float(theta)
        self._u = cmath.exp(1j * self.theta)

    def _jet(self, z: complex) -> Jet:
        return (self._u * z, self._u, 0.0 + 0.0j, 0.0 + 0.0j)

    def q(self, z: complex) -> complex:
        return self._u

    def q_taylor(self, order: int) -> TaylorSeries:
        return TaylorSeries([self._u], order=order)


def _mobius_factor_jet(a: complex, z: complex) -> Jet:
    """Jet of the Blaschke factor (z - a)/(1 - conj(a)*z)."""
    ac = a.conjugate()
    u = 1.0 - ac * z
    s = 1.0 - abs(a) ** 2
    return ((z - a) / u, s / u**2, 2.0 * ac * s / u**3, 6.0 * ac**2 * s / u**4)


class Blaschke2(SchwarzFunction):
    """Degree-2 Blaschke product fixing 0: p*z*(z - b)/(1 - b*z).

    The sign p is +1 or -1 and b is real in (-1, 1); this is exactly the
    family that attains equality in the derivative-variability bound for
    Schwarz functions.
    """

    family = "blaschke2"
    degree = 2

    def __init__(self, p: int, b: float):
        if p not in (-1, 1):
            raise BadParameter(f"p must be +1 or -1, got {p!r}")
        if not -1.0 < float(b) < 1.0:
            raise BadParameter(f"b must lie in (-1, 1), got {b!r}")
        self.p = int(p)
        self.b = float(b)

    def _jet(self, z: complex) -> Jet:
        m = _mobius_factor_jet(complex(self.b), z)
        return tuple(self.p * c for c in jet_mul((z, 1.0, 0.0, 0.0), m))

    def q(self, z: complex) -> complex:
        return self.p * (z - self.b) / (1.0 - self.b * z)

    def q_taylor(self, order: int) -> TaylorSeries:
        b, p = self.b, self.p
        c = np.empty(order + 1, dtype=np.complex128)
        c[0] = -p * b
        if order >= 1:
            n = np.arange(order)
            c[1:] = p * (1.0 - b * b) * np.power(complex(b), n)
        return TaylorSeries(c)


class BlaschkeFix0(SchwarzFunction):
    """Finite Blaschke product fixing 0: e^{i*theta} * z * prod (z-a_j)/(1-conj(a_j)z).

    Degree is 1 + len(zeros); zeros may be complex and may repeat.
    """

    family = "blaschke_fix0"

    def __init__(self, zeros, theta: float = 0.0):
        self.zeros = tuple(complex(a) for a in zeros)
        for a in self.zeros:
            if abs(a) >= 1.0:
                raise BadParameter(f"Blaschke zero {a!r} must lie inside the disk")
        self.theta = float(theta)
        self._u = cmath.exp(1j * self.theta)
        self.degree = 1 + len(self.zeros)

    def _q_jet(self, z: complex) -> Jet:
        acc = (self._u, 0.0 + 0.0j, 0.0 + 0.0j, 0.0 + 0.0j)
        for a in self.zeros:
            acc = jet_mul(acc, _mobius_factor_jet(a, z))
        return acc

    def _jet(self, z: complex) -> Jet:
        return jet_mul((z, 1.0, 0.0, 0.0), self._q_jet(z))

    def q(self, z: complex) -> complex:
        out = self._u
        for a in self.zeros:
            out *= (z - a) / (1.0 - a.conjugate() * z)
        return out

    def q_taylor(self, order: int) -> TaylorSeries:
        acc = TaylorSeries([self._u], order=order)
        for a in self.zeros:
            c = np.empty(order + 1, dtype=np.complex128)
            c[0] = -a
            if order >= 1:
                n = np.arange(order)
                c[1:] = (1.0 - abs(a) ** 2) * np.power(a.conjugate(), n)
            acc = acc * TaylorSeries(c)
        return acc


@dataclass(frozen=True)
class CertReport:
    """Grid evidence that a map is a Schwarz function.

    All three defects are 0 for an exact member: max of |omega(z)|-|z|,
    the modulus at the origin, and the Schwarz-Pick excess
    max(0, |omega'(z)|(1-|z|^2) - (1-|omega(z)|^2)).
    """

    modulus_defect: float
    origin_defect: float
    schwarz_pick_defect: float
    tol: float

    @property
    def passed(self) -> bool:
        return (
            self.modulus_defect <= self.tol
            and self.origin_defect <= self.tol
            and self.schwarz_pick_defect <= self.tol
        )


def schwarz_certify(omega: DiskFunction, grid: GridConfig | None = None,
                    tol: float = 1e-12) -> CertReport:
    """Check Schwarz-class membership numerically on a polar grid.

    Violations are reported in the result, never raised.
    """
    cfg = grid or GridConfig()
    origin = abs(omega.value(0.0))
    mod_defect = -np.inf
    sp_defect = 0.0
    for z in polar_points(cfg):
        z = complex(z)
        w, dw, _, _ = omega.jet(z)
        mod_defect = max(mod_defect, abs(w) - abs(z))
        sp_defect = max(sp_defect, abs(dw) * (1.0 - abs(z) ** 2) - (1.0 - abs(w) ** 2))
    return CertReport(
        modulus_defect=float(mod_defect),
        origin_defect=float(origin),
        schwarz_pick_defect=float(max(0.0, sp_defect)),
        tol=tol,
    )
