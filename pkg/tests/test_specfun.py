"""Tests for special functions and the Hurwitz zeta continuation."""

import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from landau_wigner.errors import DomainError, PoleError
from landau_wigner.specfun import (EULER_MACLAURIN, HASSE, ZetaMethod, bernoulli_number,
                                   bernoulli_poly, gamma_residue, genlaguerre, hermite,
                                   hurwitz_zeta, laguerre, laguerre_deriv, residue_extrapolate,
                                   riemann_zeta, zeta_residue_check)

# Frozen oracle values (explicit sums / mpmath at 40 digits).
L5_AT_1_25 = -0.20951334635416666667      # sum_k C(5,k) (-x)^k / k!
H6_AT_0_7 = 125.081536                    # explicit Hermite sum
ZETA_MINUS_HALF = -0.20788622497735456602  # mpmath.zeta(-0.5)


class TestLaguerre:
    def test_trivial_values(self):
        assert laguerre(0, 7.3) == 1.0
        assert laguerre(1, 2.0) == -1.0

    def test_explicit_sum_oracle(self):
        x = 1.25
        oracle = sum(math.comb(5, k) * (-x) ** k / math.factorial(k) for k in range(6))
        assert oracle == pytest.approx(L5_AT_1_25, abs=1e-15)
        assert laguerre(5, x) == pytest.approx(L5_AT_1_25, abs=1e-12)

    def test_vectorized_shape(self):
        x = np.linspace(0, 3, 12).reshape(3, 4)
        out = laguerre(3, x)
        assert out.shape == (3, 4)
        assert isinstance(laguerre(3, 0.5), float)

    def test_non_finite_rejected(self):
        with pytest.raises(DomainError):
            laguerre(2, math.nan)
        with pytest.raises(DomainError):
            laguerre(-2, 1.0)

    def test_minus_one_is_zero(self):
        assert laguerre(-1, 1.0) == 0.0

    def test_recurrence_consistency(self):
        x = np.linspace(0.0, 50.0, 201)
        for n in range(1, 30):
            lhs = (n + 1) * laguerre(n + 1, x)
            rhs = (2 * n + 1 - x) * laguerre(n, x) - n * laguerre(n - 1, x)
            scale = np.maximum(1.0, np.abs(lhs))
            assert np.max(np.abs(lhs - rhs) / scale) < 1e-10

    @pytest.mark.parametrize("n", [0, 3, 7, 12])
    def test_against_mpmath(self, n):
        for x in (0.0, 0.4, 2.5, 9.0):
            assert laguerre(n, x) == pytest.approx(float(mpmath.laguerre(n, 0, x)), rel=1e-12,
                                                   abs=1e-12)

    def test_generalized_orthogonality(self):
        # int_0^inf v e^{-v} L^(1)_{n-1} L^(1)_{m-1} dv = n delta_nm (Gauss-Laguerre, alpha = 1)
        from scipy.special import roots_genlaguerre
        v, w = roots_genlaguerre(40, 1.0)
        for n in range(1, 11):
            for m in range(1, 11):
                val = np.sum(w * genlaguerre(n - 1, 1.0, v) * genlaguerre(m - 1, 1.0, v))
                assert val == pytest.approx(n if n == m else 0.0, abs=1e-8)


class TestLaguerreDeriv:
    def test_trivial(self):
        assert laguerre_deriv(1, 0.0) == -1.0
        assert laguerre_deriv(0, 3.0) == 0.0

    def test_finite_difference_oracle(self):
        h = 1e-5
        fd = (laguerre(4, 2.0 + h) - laguerre(4, 2.0 - h)) / (2 * h)
        assert laguerre_deriv(4, 2.0) == pytest.approx(fd, abs=1e-6)
        assert laguerre_deriv(4, 2.0) == pytest.approx(4.0 / 3.0, abs=1e-12)

    @given(st.integers(1, 15), st.floats(0.0, 20.0))
    @settings(max_examples=50, deadline=None)
    def test_matches_associated_laguerre(self, n, x):
        assert laguerre_deriv(n, x) == pytest.approx(-genlaguerre(n - 1, 1.0, x), rel=1e-12,
                                                     abs=1e-12)


class TestHermite:
    def test_trivial(self):
        assert hermite(0, 1.1) == 1.0
        assert hermite(2, 1.0) == 2.0

    def test_explicit_sum(self):
        x, n = 0.7, 6
        oracle = sum((-1) ** m * math.factorial(n) / (math.factorial(m) * math.factorial(n - 2 * m))
                     * (2 * x) ** (n - 2 * m) for m in range(n // 2 + 1))
        assert oracle == pytest.approx(H6_AT_0_7, abs=1e-12)
        assert hermite(6, x) == pytest.approx(H6_AT_0_7, abs=1e-10)

    @given(st.integers(0, 20), st.floats(-4.0, 4.0))
    @settings(max_examples=50, deadline=None)
    def test_parity(self, n, x):
        assert hermite(n, -x) == pytest.approx((-1) ** n * hermite(n, x), rel=1e-12, abs=1e-9)


class TestGammaResidue:
    def test_values(self):
        assert gamma_residue(0) == 1.0
        assert gamma_residue(1) == -1.0
        assert gamma_residue(5) == pytest.approx(-1.0 / 120.0, rel=1e-15)

    def test_negative_rejected(self):
        with pytest.raises(DomainError):
            gamma_residue(-1)


class TestBernoulli:
    def test_numbers(self):
        assert bernoulli_number(0) == 1
        assert bernoulli_number(1) == Fraction(-1, 2)
        assert bernoulli_number(4) == Fraction(-1, 30)
        assert bernoulli_number(7) == 0
        for k in range(0, 21):
            assert float(bernoulli_number(k)) == pytest.approx(float(mpmath.bernoulli(k)),
                                                               rel=1e-15, abs=1e-300)

    def test_polynomials(self):
        assert bernoulli_poly(0, 3.7) == 1.0
        assert bernoulli_poly(1, 2.0) == 1.5
        assert bernoulli_poly(4, 0.0) == pytest.approx(-1.0 / 30.0, abs=1e-15)

    @given(st.integers(0, 12), st.floats(-2.0, 3.0))
    @settings(max_examples=40, deadline=None)
    def test_polynomial_matches_mpmath(self, k, a):
        assert bernoulli_poly(k, a) == pytest.approx(float(mpmath.bernpoly(k, a)),
                                                     rel=1e-10, abs=1e-10)


class TestHurwitzZeta:
    def test_zero_argument_identity(self):
        for a in (0.3, 1.0, 2.0, 7.5):
            assert hurwitz_zeta(0.0, a) == pytest.approx(0.5 - a, abs=1e-10)
        assert hurwitz_zeta(0.0, 2.0) == pytest.approx(-1.5, abs=1e-12)

    def test_riemann_minus_one(self):
        assert riemann_zeta(-1.0) == pytest.approx(-1.0 / 12.0, abs=1e-10)
        # Bernoulli closed form zeta(-n) = -B_{n+1}/(n+1)
        assert -float(bernoulli_number(2)) / 2 == pytest.approx(-1.0 / 12.0, abs=1e-16)

    def test_minus_half_dual_method(self):
        em = hurwitz_zeta(-0.5, 1.0, EULER_MACLAURIN)
        hs = hurwitz_zeta(-0.5, 1.0, HASSE)
        assert em == pytest.approx(hs, abs=1e-8)
        assert em == pytest.approx(ZETA_MINUS_HALF, abs=1e-12)

    def test_negative_even_bernoulli_identity(self):
        for k in range(0, 6):
            for a in (0.5, 1.0, 2.0):
                expected = -bernoulli_poly(2 * k + 1, a) / (2 * k + 1)
                assert hurwitz_zeta(-2.0 * k, a) == pytest.approx(expected, abs=1e-10)

    @pytest.mark.parametrize("s", [-7.5, -3.5, -1.5, -0.5, 0.5, 1.5, 3.0])
    @pytest.mark.parametrize("a", [0.25, 0.5, 1.0, 3.7, 10.0])
    def test_against_mpmath(self, s, a):
        ref = float(mpmath.zeta(s, a))
        assert hurwitz_zeta(s, a) == pytest.approx(ref, rel=1e-10, abs=1e-12)

    def test_dual_method_grid(self):
        for s in np.arange(-10.0, 4.01, 0.5):
            if s == 1.0:
                continue
            for a in (0.5, 1.0, 2.0, 10.0):
                em = hurwitz_zeta(s, a, EULER_MACLAURIN)
                hs = hurwitz_zeta(s, a, HASSE)
                assert abs(em - hs) <= 1e-8 * max(1.0, abs(hs)), (s, a)

    def test_errors(self):
        with pytest.raises(PoleError):
            hurwitz_zeta(1.0, 2.0)
        with pytest.raises(DomainError):
            hurwitz_zeta(0.5, 0.0)
        with pytest.raises(DomainError):
            hurwitz_zeta(0.5, -1.0)
        assert issubclass(PoleError, DomainError)

    def test_method_validation(self):
        with pytest.raises((DomainError, ValueError)):
            ZetaMethod(method="bogus")
        cfg = ZetaMethod.hasse(80)
        assert hurwitz_zeta(-1.5, 2.0, cfg) == pytest.approx(float(mpmath.zeta(-1.5, 2.0)),
                                                            rel=1e-10)


class TestResidue:
    def test_direct_value(self):
        assert abs(zeta_residue_check(0.5, 1e-3) - 1.0) < 5e-3

    @pytest.mark.parametrize("a", [0.5, 1.0, 10.0])
    def test_extrapolation(self, a):
        assert residue_extrapolate(a) == pytest.approx(1.0, abs=1e-6)

    def test_eps_domain(self):
        with pytest.raises(DomainError):
            zeta_residue_check(1.0, 0.0)
