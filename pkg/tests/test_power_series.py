import math

import numpy as np
import pytest

from schwarzlab.power_series import NonvanishingInner, TaylorSeries, ZeroConstantTerm


def naive_mul(a, b, order):
    """Brute-force Cauchy product, independent of np.convolve."""
    out = np.zeros(order + 1, dtype=complex)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            if i + j <= order:
                out[i + j] += ai * bj
    return out


def log_series(a):
    """Oracle: log(a/a0) as the antiderivative of a'/a."""
    return (a.derivative() / a).integrate()


def unit_scale_series(rng, order, lead_min=0.7):
    """Random series with zero-free closed unit disk: |a0| in [0.7, 1.3]
    and tail bounded by 0.5/(n^2+1), so sum|a_n| < |a0|."""
    phases = np.exp(2j * np.pi * rng.uniform(size=order + 1))
    mags = np.empty(order + 1)
    mags[0] = rng.uniform(lead_min, 1.3)
    n = np.arange(1, order + 1)
    mags[1:] = rng.uniform(size=order) * 0.5 / (n**2 + 1)
    return TaylorSeries(mags * phases)


def coeff_gap(a, b):
    n = min(a.order, b.order) + 1
    return float(np.max(np.abs(a.coeffs[:n] - b.coeffs[:n])))


class TestMul:
    def test_telescoping(self):
        prod = TaylorSeries([1, 1], order=6) * TaylorSeries([1, -1], order=6)
        assert np.allclose(prod.coeffs, [1, 0, -1, 0, 0, 0, 0])

    def test_identity(self, rng):
        s = TaylorSeries(rng.normal(size=9) + 1j * rng.normal(size=9))
        assert coeff_gap(s * TaylorSeries.one(8), s) == 0.0

    def test_geometric_annihilation(self):
        geom = TaylorSeries(np.ones(33))
        prod = geom * TaylorSeries([1, -1], order=32)
        expected = np.zeros(33)
        expected[0] = 1.0
        assert np.array_equal(prod.coeffs, expected)

    def test_matches_naive_convolution(self, rng):
        a = TaylorSeries(rng.normal(size=12) + 1j * rng.normal(size=12))
        b = TaylorSeries(rng.normal(size=12) + 1j * rng.normal(size=12))
        assert np.max(np.abs((a * b).coeffs - naive_mul(a.coeffs, b.coeffs, 11))) < 1e-13

    def test_min_order_rule(self):
        a = TaylorSeries.one(10)
        b = TaylorSeries.one(4)
        assert (a * b).order == 4
        assert (a + b).order == 4
        assert (a - b).order == 4


class TestDiv:
    def test_geometric(self):
        inv = 1.0 / TaylorSeries([1, -1], order=8)
        assert np.allclose(inv.coeffs, np.ones(9))

    def test_self_division(self, rng):
        a = unit_scale_series(rng, 16)
        one = a / a
        assert abs(one[0] - 1.0) < 1e-14
        assert np.max(np.abs(one.coeffs[1:])) < 1e-13

    def test_mobius_quotient(self):
        # (2/(1-z)) / (1/(1-z)^2) simplifies to 2(1-z)
        num = TaylorSeries(2.0 * np.ones(9))
        den = TaylorSeries(np.arange(1, 10))
        q = num / den
        assert np.allclose(q.coeffs, [2, -2, 0, 0, 0, 0, 0, 0, 0], atol=1e-14)

    def test_zero_constant_term(self):
        with pytest.raises(ZeroConstantTerm):
            TaylorSeries.one(4) / TaylorSeries.identity(4)

    def test_inverse_property(self, rng):
        for _ in range(5):
            a = unit_scale_series(rng, 32)
            b = unit_scale_series(rng, 32)
            assert coeff_gap((a / b) * b, a) < 1e-12


class TestCompose:
    def test_geometric_of_z_squared(self):
        geom = TaylorSeries(np.ones(9))
        out = geom.compose(TaylorSeries([0, 0, 1], order=8))
        assert np.allclose(out.coeffs, [1, 0, 1, 0, 1, 0, 1, 0, 1])

    def test_identity_inner(self, rng):
        outer = TaylorSeries(rng.normal(size=9))
        assert coeff_gap(outer.compose(TaylorSeries.identity(8)), outer) < 1e-14

    def test_hand_expansion(self):
        # (w + w^2) o (z + z^2) = z + 2z^2 + 2z^3 + z^4
        s = TaylorSeries([0, 1, 1], order=6)
        out = s.compose(s)
        assert np.allclose(out.coeffs, [0, 1, 2, 2, 1, 0, 0])

    def test_nonvanishing_inner(self):
        with pytest.raises(NonvanishingInner):
            TaylorSeries.one(4).compose(TaylorSeries.one(4))


class TestCalculus:
    def test_derivative(self):
        d = TaylorSeries([0, 1, 1]).derivative()
        assert np.allclose(d.coeffs, [1, 2])
        assert d.order == 1

    def test_integrate(self):
        s = TaylorSeries([1, 2]).integrate()
        assert np.allclose(s.coeffs, [0, 1, 1])
        assert s.order == 2

    def test_fundamental_theorem(self, rng):
        a = TaylorSeries(rng.normal(size=17) + 1j * rng.normal(size=17))
        back = a.integrate().derivative()
        assert coeff_gap(back, a) < 1e-15

    def test_product_rule(self, rng):
        for _ in range(5):
            a = unit_scale_series(rng, 24)
            b = unit_scale_series(rng, 24)
            lhs = (a * b).derivative()
            rhs = a.derivative() * b + a * b.derivative()
            assert coeff_gap(lhs, rhs) < 1e-12


class TestExp:
    def test_exp_zero(self):
        e = TaylorSeries.zero(6).exp()
        assert np.allclose(e.coeffs, [1, 0, 0, 0, 0, 0, 0])

    def test_exp_2z_factorial_recurrence(self):
        e = TaylorSeries([0, 2], order=12).exp()
        expected = [2.0**n / math.factorial(n) for n in range(13)]
        assert np.allclose(e.coeffs, expected, rtol=1e-14)

    def test_exp_of_log_of_geometric(self):
        geom = TaylorSeries(np.ones(33))
        assert coeff_gap(log_series(geom).exp(), geom) < 1e-12

    def test_exp_log_roundtrip(self, rng):
        for _ in range(5):
            a = unit_scale_series(rng, 128)
            recon = log_series(a).exp() * a[0]
            assert coeff_gap(recon, a) < 1e-12


class TestEval:
    def test_geometric_at_zero(self):
        assert TaylorSeries(np.ones(9))(0.0) == 1.0

    def test_identity_at_point(self):
        z = 0.3 + 0.4j
        assert TaylorSeries.identity(8)(z) == z

    def test_geometric_truncation_bound(self):
        geom = TaylorSeries(np.ones(129))
        assert abs(geom(0.5) - 2.0) <= 1e-30

    def test_eval_consistency_with_mul(self, rng):
        for _ in range(5):
            a = TaylorSeries(rng.uniform(-1, 1, size=65) + 1j * rng.uniform(-1, 1, size=65))
            b = TaylorSeries(rng.uniform(-1, 1, size=65) + 1j * rng.uniform(-1, 1, size=65))
            z = 0.5 * np.exp(2j * np.pi * rng.uniform())
            assert abs((a * b)(z) - a(z) * b(z)) < 1e-12


class TestStructure:
    def test_order_padding(self):
        s = TaylorSeries([1, 2], order=5)
        assert s.order == 5
        assert s[5] == 0

    def test_immutability(self):
        s = TaylorSeries([1, 2])
        with pytest.raises(AttributeError):
            s.coeffs = np.zeros(2)
        with pytest.raises(ValueError):
            s.coeffs[0] = 5.0

    def test_normalized_flag(self):
        assert TaylorSeries([0, 1, 3]).is_normalized()
        assert not TaylorSeries([1, 1]).is_normalized()

    def test_scalar_arithmetic(self):
        s = TaylorSeries([1, 1], order=3)
        assert np.allclose((2 * s).coeffs, [2, 2, 0, 0])
        assert np.allclose((s + 1).coeffs, [2, 1, 0, 0])
        assert np.allclose((1 - s).coeffs, [0, -1, 0, 0])
        assert np.allclose((s / 2).coeffs, [0.5, 0.5, 0, 0])
