"""Truncated complex Taylor series about the origin.

A series is a finite coefficient vector ``c[0..N]`` standing for the
polynomial ``c0 + c1*z + ... + cN*z**N``; ``N`` is the truncation order.
Every binary operation truncates its result to the smaller operand
order, so a chain of operations never silently inflates its own cost.
Callers that need headroom allocate a larger order up front.

Coefficients are double-precision complex.  For unit-scale series the
coefficient recurrences used here stay near 1e-12 of exact up to order
128.  Evaluation of the truncated polynomial makes no promise about the
discarded tail; callers restrict the evaluation radius themselves.
"""

from __future__ import annotations

import cmath

import numpy as np
from numpy.polynomial import polynomial as npoly

from .errors import SchwarzlabError

DEFAULT_ORDER = 128


class ZeroConstantTerm(SchwarzlabError):
    """Division by a series whose constant term is exactly zero."""


class NonvanishingInner(SchwarzlabError):
    """Composition with an inner series that does not vanish at 0."""


def _coerce(c, order=None) -> np.ndarray:
    arr = np.atleast_1d(np.array(c, dtype=np.complex128, copy=True)).ravel()
    if arr.size == 0:
        raise ValueError("a series needs at least its constant term")
    if order is not None:
        if order < 0:
            raise ValueError(f"order must be >= 0, got {order}")
        out = np.zeros(order + 1, dtype=np.complex128)
        n = min(arr.size, order + 1)
        out[:n] = arr[:n]
        arr = out
    return arr


class TaylorSeries:
    """Immutable truncated power series with complex coefficients.

    ``TaylorSeries(c)`` takes the coefficients in ascending order;
    ``TaylorSeries(c, order=N)`` pads with zeros or truncates to make
    the order exactly ``N``.  Arithmetic (`+`, `-`, `*`, `/`), either
    with another series or with a scalar, returns a new series.  A
    series is callable: ``s(z)`` evaluates the truncated polynomial by
    Horner's rule.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, order: int | None = None):
        object.__setattr__(self, "coeffs", _coerce(coeffs, order))
        self.coeffs.flags.writeable = False

    def __setattr__(self, name, value):
        raise AttributeError("TaylorSeries is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, order: int = DEFAULT_ORDER) -> "TaylorSeries":
        return cls([0.0], order=order)

    @classmethod
    def one(cls, order: int = DEFAULT_ORDER) -> "TaylorSeries":
        return cls([1.0], order=order)

    @classmethod
    def identity(cls, order: int = DEFAULT_ORDER) -> "TaylorSeries":
        """The series of z itself."""
        return cls([0.0, 1.0], order=order)

    # -- basic structure ----------------------------------------------

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    def __len__(self) -> int:
        return self.coeffs.size

    def __getitem__(self, n: int) -> complex:
        return complex(self.coeffs[n])

    def truncate(self, order: int) -> "TaylorSeries":
        """Copy of this series with order exactly `order` (pad or drop)."""
        return TaylorSeries(self.coeffs, order=order)

    def is_normalized(self, tol: float = 0.0) -> bool:
        """True when c0 = 0 and c1 = 1 up to `tol`."""
        return abs(self.coeffs[0]) <= tol and abs(self.coeffs[1] - 1.0) <= tol

    def __repr__(self) -> str:
        head = ", ".join(f"{c:.6g}" for c in self.coeffs[:4])
        tail = ", ..." if self.order > 3 else ""
        return f"TaylorSeries([{head}{tail}], order={self.order})"

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        if isinstance(other, TaylorSeries):
            n = min(self.order, other.order) + 1
            return TaylorSeries(self.coeffs[:n] + other.coeffs[:n])
        c = self.coeffs.copy()
        c[0] += other
        return TaylorSeries(c)

    __radd__ = __add__

    def __neg__(self):
        return TaylorSeries(-self.coeffs)

    def __sub__(self, other):
        return self + (-other if isinstance(other, TaylorSeries) else -complex(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TaylorSeries):
            n = min(self.order, other.order) + 1
            return TaylorSeries(np.convolve(self.coeffs, other.coeffs)[:n])
        return TaylorSeries(self.coeffs * complex(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TaylorSeries):
            return _divide(self, other)
        return TaylorSeries(self.coeffs / complex(other))

    def __rtruediv__(self, other):
        return _divide(TaylorSeries([other], order=self.order), self)

    # -- calculus -----------------------------------------------------

    def derivative(self) -> "TaylorSeries":
        """Term-wise derivative; the order drops by one."""
        if self.order == 0:
            return TaylorSeries([0.0])
        n = np.arange(1, self.coeffs.size)
        return TaylorSeries(self.coeffs[1:] * n)

    def integrate(self) -> "TaylorSeries":
        """Antiderivative vanishing at 0; the order rises by one."""
        n = np.arange(1, self.coeffs.size + 1)
        out = np.empty(self.coeffs.size + 1, dtype=np.complex128)
        out[0] = 0.0
        out[1:] = self.coeffs / n
        return TaylorSeries(out)

    def exp(self) -> "TaylorSeries":
        """Series E with E' = a'·E and E(0) = e^{a0}.

        The standard recurrence n·E[n] = sum_{k=1..n} k·a[k]·E[n-k] is
        exact on coefficients; a nonzero constant term only contributes
        the scalar factor e^{a0}.
        """
        a = self.coeffs
        n = a.size
        e = np.zeros(n, dtype=np.complex128)
        e[0] = cmath.exp(a[0])
        ka = a * np.arange(n)
        for m in range(1, n):
            e[m] = np.dot(ka[1 : m + 1], e[m - 1 :: -1]) / m
        return TaylorSeries(e)

    def compose(self, inner: "TaylorSeries") -> "TaylorSeries":
        """Coefficients of self(inner(z)), Horner-accumulated.

        Requires inner(0) = 0 exactly, otherwise every output
        coefficient would need the full (divergent) outer tail.
        """
        if inner.coeffs[0] != 0:
            raise NonvanishingInner(
                f"inner constant term must be 0, got {complex(inner.coeffs[0])!r}"
            )
        order = min(self.order, inner.order)
        inner_t = inner.truncate(order)
        acc = TaylorSeries([self.coeffs[-1]], order=order)
        for k in range(self.coeffs.size - 2, -1, -1):
            acc = acc * inner_t + complex(self.coeffs[k])
        return acc

    # -- evaluation ---------------------------------------------------

    def __call__(self, z: complex) -> complex:
        """Horner evaluation of the truncated polynomial at z."""
        return complex(npoly.polyval(z, self.coeffs))

    def eval_many(self, zs: np.ndarray) -> np.ndarray:
        """Vectorized Horner evaluation over an array of points."""
        return npoly.polyval(np.asarray(zs, dtype=np.complex128), self.coeffs)


def _divide(a: TaylorSeries, b: TaylorSeries) -> TaylorSeries:
    """Series c with c*b = a up to truncation, by the standard recurrence."""
    if b.coeffs[0] == 0:
        raise ZeroConstantTerm("cannot divide by a series with zero constant term")
    n = min(a.order, b.order) + 1
    ac, bc = a.coeffs, b.coeffs
    c = np.zeros(n, dtype=np.complex128)
    c[0] = ac[0] / bc[0]
    for m in range(1, n):
        c[m] = (ac[m] - np.dot(c[:m], bc[m:0:-1])) / bc[0]
    return TaylorSeries(c)
