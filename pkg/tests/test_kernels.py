"""Kernel evaluation: exact values, periodicity, symmetry, the Bernoulli
closed form, the sawtooth-derivative relation, root locations, and the cosine
Fourier series as a slow independent oracle."""

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from dilogzeta import (
    PI2_6,
    PI2_12,
    ROOT_HI,
    ROOT_LO,
    TWO_PI,
    DomainError,
    KernelId,
    kernel_cosine_partial,
    kernel_eval,
    reduce_period,
)


def p(x: float) -> float:
    return kernel_eval(KernelId.P, x)


class TestReducePeriod:
    def test_exact_points(self):
        assert reduce_period(0.0) == (0, 0.0)
        n, theta = reduce_period(TWO_PI)
        assert n == 1 and abs(theta) < 1e-15
        n, theta = reduce_period(7.0)
        assert n == 1 and abs(theta - (7.0 - TWO_PI)) < 1e-15

    @given(st.floats(min_value=0.0, max_value=1e6, allow_nan=False))
    def test_roundtrip(self, x):
        n, theta = reduce_period(x)
        assert n >= 0
        assert 0.0 <= theta < TWO_PI
        assert abs(TWO_PI * n + theta - x) <= 1e-9 * max(1.0, x)

    def test_rejects_negative(self):
        with pytest.raises(DomainError):
            reduce_period(-1.0)

    def test_rejects_non_finite(self):
        with pytest.raises(DomainError):
            reduce_period(math.nan)
        with pytest.raises(DomainError):
            reduce_period(math.inf)


class TestKernelValues:
    def test_p_endpoints(self):
        assert p(0.0) == pytest.approx(PI2_6, abs=1e-15)
        assert p(math.pi) == pytest.approx(-PI2_12, abs=1e-15)

    def test_ptilde_shift(self):
        assert kernel_eval(KernelId.PTILDE, math.pi) == pytest.approx(0.0, abs=1e-15)
        assert kernel_eval(KernelId.PTILDE, 0.0) == pytest.approx(
            PI2_6 + PI2_12, abs=1e-15
        )

    def test_q_values(self):
        assert kernel_eval(KernelId.Q, 0.0) == pytest.approx(-math.pi / 2.0, abs=1e-15)
        assert kernel_eval(KernelId.Q, math.pi) == pytest.approx(0.0, abs=1e-15)

    def test_alt_square_wave(self):
        assert kernel_eval(KernelId.ALT, 1.0) == 1.0
        assert kernel_eval(KernelId.ALT, 7.0) == -1.0  # 7 > 2*pi, second period

    def test_left_closed_jumps(self):
        # at x = 2*pi the new period has started
        assert kernel_eval(KernelId.Q, TWO_PI) == pytest.approx(
            -math.pi / 2.0, abs=1e-12
        )
        assert kernel_eval(KernelId.ALT, TWO_PI) == -1.0
        assert kernel_eval(KernelId.ALT, 2.0 * TWO_PI) == 1.0


class TestPeriodicity:
    @given(st.floats(min_value=0.0, max_value=100.0, allow_nan=False))
    def test_p_q_periodic(self, x):
        for k in (KernelId.P, KernelId.PTILDE, KernelId.Q):
            assert kernel_eval(k, x + TWO_PI) == pytest.approx(
                kernel_eval(k, x), abs=1e-12
            )

    @given(st.floats(min_value=0.0, max_value=100.0, allow_nan=False))
    def test_alt_antiperiodic(self, x):
        assert kernel_eval(KernelId.ALT, x + TWO_PI) == -kernel_eval(KernelId.ALT, x)

    @given(st.floats(min_value=1e-6, max_value=TWO_PI - 1e-6, allow_nan=False))
    def test_p_reflection_symmetry(self, theta):
        assert p(TWO_PI - theta) == pytest.approx(p(theta), abs=1e-13)

    @given(st.floats(min_value=0.0, max_value=1000.0, allow_nan=False))
    def test_ptilde_nonnegative(self, x):
        assert kernel_eval(KernelId.PTILDE, x) >= -1e-12


class TestClosedForms:
    def test_bernoulli_polynomial_link(self):
        # p(theta) = pi^2 B2(theta / 2 pi) with B2(t) = t^2 - t + 1/6
        for theta in np.linspace(0.0, TWO_PI - 1e-9, 97):
            t = theta / TWO_PI
            b2 = t * t - t + 1.0 / 6.0
            assert p(float(theta)) == pytest.approx(math.pi ** 2 * b2, abs=1e-14)

    @given(st.floats(min_value=0.1, max_value=TWO_PI - 0.1, allow_nan=False))
    def test_q_is_derivative_of_p(self, theta):
        h = 1e-5
        fd = (p(theta + h) - p(theta - h)) / (2.0 * h)
        assert kernel_eval(KernelId.Q, theta) == pytest.approx(fd, abs=1e-6)

    def test_root_locations(self):
        assert abs(p(ROOT_LO)) < 1e-12
        assert abs(p(ROOT_HI)) < 1e-12
        # sign pattern on the fundamental domain
        assert p(0.5 * ROOT_LO) > 0.0
        assert p(math.pi) < 0.0
        assert p(0.5 * (ROOT_HI + TWO_PI)) > 0.0


class TestCosineSeriesOracle:
    def test_small_partial_sum_exact(self):
        expected = -1.0 + 1.0 / 4.0 - 1.0 / 9.0 + 1.0 / 16.0
        assert kernel_cosine_partial(math.pi, 4) == pytest.approx(expected, abs=1e-15)

    def test_series_converges_to_p(self):
        rng = np.random.RandomState(1234)
        for x in rng.uniform(0.0, 50.0, 100):
            partial = kernel_cosine_partial(float(x), 1_000_000)
            assert abs(partial - p(float(x))) <= 2e-6

    def test_rejects_bad_order(self):
        with pytest.raises(DomainError):
            kernel_cosine_partial(1.0, 0)
