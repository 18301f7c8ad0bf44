"""Factorial/Taylor series, binomial bridge terms, truncation certificates."""

from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from elab import limits, series
from elab.config import CONFIG
from elab.series import (
    BinomialTermGrid,
    ComplexValue,
    binomial_row_sum_exact,
    binomial_term,
    binomial_term_exact,
    complex_exp,
    factorial_partial_sum,
    factorial_partial_sum_exact,
    series_error_certificate,
    sinc_limit_table,
    tail_bound,
    tail_bound_exact,
    taylor_cos,
    taylor_exp,
    taylor_sin,
)

E_REF = 2.718281828459045
PI = CONFIG.pi
SIN_1 = 0.8414709848078965
INV_E = 0.3678794411714423


class TestFactorialPartialSum:
    def test_single_term(self):
        assert factorial_partial_sum(0) == 1.0

    def test_five_terms_exact_fraction(self):
        assert factorial_partial_sum_exact(5) == Fraction(163, 60)
        assert factorial_partial_sum(5) == pytest.approx(float(Fraction(163, 60)), abs=1e-16)

    def test_seventeen_terms_hits_reference(self):
        assert abs(factorial_partial_sum(17) - E_REF) <= 1e-15

    def test_term_cap(self):
        with pytest.raises(ValueError):
            factorial_partial_sum(171)
        factorial_partial_sum(170)

    @settings(max_examples=60)
    @given(st.integers(0, 60))
    def test_matches_exact_oracle(self, m):
        assert factorial_partial_sum(m) == pytest.approx(float(factorial_partial_sum_exact(m)), rel=1e-15)


class TestTailBound:
    def test_m_zero(self):
        b = tail_bound(0)
        assert b >= 2.0 - 1e-12
        assert b >= E_REF - 1.0

    def test_m_five_dominates_true_tail(self):
        true_tail = float(factorial_partial_sum_exact(30) - factorial_partial_sum_exact(5))
        b = tail_bound(5)
        assert b == pytest.approx(7.0 / 4320.0, rel=1e-12)
        assert b >= true_tail

    def test_m_seventeen_small(self):
        assert tail_bound(17) <= 2.1e-16

    @settings(max_examples=40)
    @given(st.integers(0, 40))
    def test_always_dominates(self, m):
        true_tail = factorial_partial_sum_exact(m + 40) - factorial_partial_sum_exact(m)
        assert Fraction(tail_bound(m)) >= true_tail
        assert tail_bound_exact(m) >= true_tail


class TestBinomialTerms:
    def test_k_zero_and_one(self):
        assert binomial_term(17, 0) == 1.0
        assert binomial_term(17, 1) == 1.0

    def test_hand_checkable(self):
        # a(4, 2) = (1/2!) * (4*3/16) = 6/16
        assert binomial_term(4, 2) == pytest.approx(0.375, abs=1e-16)
        assert binomial_term_exact(4, 2) == Fraction(6, 16)

    def test_k_out_of_range(self):
        with pytest.raises(ValueError, match="k out of range"):
            binomial_term(5, 6)
        with pytest.raises(ValueError, match="k out of range"):
            binomial_term_exact(5, -1)

    def test_row_sum_identity(self):
        for n in (1, 2, 7, 33, 60):
            assert binomial_row_sum_exact(n) == limits.compound_exact(1, n)

    @settings(max_examples=150)
    @given(st.integers(1, 1000), st.data())
    def test_domination(self, n, data):
        k = data.draw(st.integers(0, min(n, 80)))
        a_nk = binomial_term(n, k)
        assert a_nk > 0.0
        assert binomial_term_exact(n, k) <= Fraction(1, math.factorial(k))

    @settings(max_examples=60)
    @given(st.integers(2, 30))
    def test_pointwise_convergence(self, k):
        prev = 0.0
        for n in (k, 4 * k, 40 * k, 400 * k):
            t = binomial_term(n, k)
            assert t >= prev
            prev = t


class TestBinomialGrid:
    def test_matches_term_function(self):
        grid = BinomialTermGrid.build(12)
        assert len(grid.terms) == 13
        for k, t in enumerate(grid.terms):
            assert t == binomial_term(12, k)

    def test_exact_row_sum(self):
        for n in (1, 5, 41):
            grid = BinomialTermGrid.build(n)
            assert grid.row_sum_exact() == limits.compound_exact(1, n)
            assert math.fsum(grid.terms) == pytest.approx(float(grid.row_sum_exact()), rel=1e-13)

    def test_rejects_bad_sizes(self):
        with pytest.raises(ValueError):
            BinomialTermGrid.build(0)
        with pytest.raises(ValueError):
            BinomialTermGrid.build(10 ** 5)


class TestCertificate:
    def test_degenerate_pair(self):
        # a(1,0) = a(1,1) = 1: both gaps vanish, leaving the tail bound
        # plus the certificate's own rounding allowance.
        assert series_error_certificate(1, 1) == pytest.approx(tail_bound(1), rel=1e-14)
        assert series_error_certificate(1, 1) >= tail_bound(1)

    def test_soundness_at_stated_pairs(self):
        s = factorial_partial_sum_exact(40)
        for n, m in ((10, 5), (100, 10), (1000, 12), (10_000, 15)):
            cert = series_error_certificate(n, m)
            gap = abs(float(s - limits.compound_exact(1, n)))
            assert gap <= cert

    def test_certifies_against_printed_value(self):
        cert = series_error_certificate(100, 5)
        s = factorial_partial_sum_exact(40)
        assert abs(float(s) - 2.7048138294215263) <= cert

    def test_range_validation(self):
        with pytest.raises(ValueError):
            series_error_certificate(10, 11)
        with pytest.raises(ValueError):
            series_error_certificate(10 ** 5, 5)

    @settings(max_examples=50, deadline=None)
    @given(st.integers(2, 2000), st.data())
    def test_soundness_random(self, n, data):
        m = data.draw(st.integers(1, min(n, 25)))
        cert = series_error_certificate(n, m)
        gap = abs(float(factorial_partial_sum_exact(40) - limits.compound_exact(1, n)))
        assert gap <= cert


class TestTaylorExp:
    def test_zero(self):
        st_ = taylor_exp(0.0, 1e-15)
        assert st_.partial_sum == 1.0

    def test_one_is_reference(self):
        assert abs(taylor_exp(1.0, 1e-15).partial_sum - E_REF) <= 1e-15

    def test_minus_one_is_reciprocal(self):
        v = taylor_exp(-1.0, 1e-15).partial_sum
        assert abs(v - INV_E) <= 1e-15
        # independent oracle: exact-rational alternating partial sums
        s = sum(Fraction((-1) ** k, math.factorial(k)) for k in range(25))
        assert v == pytest.approx(float(s), rel=1e-15)

    def test_tolerance_validation(self):
        with pytest.raises(ValueError):
            taylor_exp(1.0, 0.0)
        with pytest.raises(ValueError):
            taylor_exp(1.0, -1e-3)

    def test_range_validation(self):
        with pytest.raises(ValueError):
            taylor_exp(701.0, 1e-15)

    @settings(max_examples=250, deadline=None)
    @given(st.floats(-30.0, 30.0))
    def test_against_libm(self, x):
        got = taylor_exp(x, 1e-15)
        assert got.partial_sum == pytest.approx(math.exp(x), rel=5e-14)

    @settings(max_examples=100, deadline=None)
    @given(st.floats(-20.0, 20.0))
    def test_tail_bound_covers_truth(self, x):
        got = taylor_exp(x, 1e-12)
        truncation = abs(math.exp(x) - got.partial_sum)
        assert truncation <= got.tail_bound + 8.0 * math.ulp(got.partial_sum) * max(1.0, got.terms_used)

    def test_state_fields(self):
        st_ = taylor_exp(2.0, 1e-10)
        assert st_.terms_used >= 2
        assert st_.tail_bound >= 0.0
        assert abs(st_.last_term) <= 1.0


class TestTrig:
    def test_zeros(self):
        assert taylor_sin(0.0, 1e-15) == 0.0
        assert taylor_cos(0.0, 1e-15) == 1.0

    def test_quarter_turn(self):
        assert abs(taylor_sin(PI / 2.0, 1e-15) - 1.0) <= 1e-12

    def test_half_turn(self):
        assert abs(taylor_cos(PI, 1e-15) + 1.0) <= 1e-12

    def test_validation(self):
        with pytest.raises(ValueError):
            taylor_sin(1.0, 0.0)
        with pytest.raises(ValueError):
            taylor_cos(31.0, 1e-15)

    @settings(max_examples=200, deadline=None)
    @given(st.floats(-10.0, 10.0))
    def test_pythagorean(self, x):
        s, c = taylor_sin(x, 1e-15), taylor_cos(x, 1e-15)
        assert abs(s * s + c * c - 1.0) <= 1e-12

    @settings(max_examples=200, deadline=None)
    @given(st.floats(-10.0, 10.0))
    def test_against_libm(self, x):
        assert taylor_sin(x, 1e-15) == pytest.approx(math.sin(x), abs=1e-13)
        assert taylor_cos(x, 1e-15) == pytest.approx(math.cos(x), abs=1e-13)

    def test_bounded_near_pi(self):
        for x in (-PI, -1.0, 0.5, PI):
            assert abs(taylor_sin(x, 1e-15)) <= 1.0 + 1e-15
            assert abs(taylor_cos(x, 1e-15)) <= 1.0 + 1e-15


class TestComplexExp:
    def test_zero(self):
        assert complex_exp(0.0, 1e-15) == ComplexValue(1.0, 0.0)

    def test_half_turn_identity(self):
        z = complex_exp(PI, 1e-15)
        assert math.hypot(z.re + 1.0, z.im) <= 1e-12

    def test_quarter_turn(self):
        z = complex_exp(PI / 2.0, 1e-15)
        assert math.hypot(z.re, z.im - 1.0) <= 1e-12

    def test_validation(self):
        with pytest.raises(ValueError):
            complex_exp(1.0, -1e-12)

    @settings(max_examples=150, deadline=None)
    @given(st.floats(-10.0, 10.0))
    def test_matches_sin_cos(self, theta):
        z = complex_exp(theta, 1e-13)
        assert abs(z.re - taylor_cos(theta, 1e-13)) <= 2e-13
        assert abs(z.im - taylor_sin(theta, 1e-13)) <= 2e-13

    @settings(max_examples=150, deadline=None)
    @given(st.floats(-10.0, 10.0))
    def test_unit_modulus(self, theta):
        assert abs(complex_exp(theta, 1e-15).modulus() - 1.0) <= 1e-12


class TestSincTable:
    def test_small_h_expansion(self):
        rows = sinc_limit_table([20])
        h = 2.0 ** -20
        assert rows[0].value == pytest.approx(1.0 - h * h / 6.0, abs=1e-15)

    def test_h_one(self):
        rows = sinc_limit_table([1])
        assert rows[0].value == pytest.approx(taylor_sin(0.5, 1e-16) / 0.5, abs=0.0)

    def test_monotone_rise_toward_one(self):
        rows = sinc_limit_table(range(1, 31))
        for a, b in zip(rows, rows[1:]):
            assert b.value >= a.value
        assert rows[-1].value <= 1.0

    def test_level_validation(self):
        with pytest.raises(ValueError):
            sinc_limit_table([0])
        with pytest.raises(ValueError):
            sinc_limit_table([31])
