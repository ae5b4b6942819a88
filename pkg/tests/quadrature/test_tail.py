import itertools
import math
import sys

import numpy as np
import pytest
from scipy import integrate

from fracperiod.quadrature import (
    NonPositiveTime,
    smooth_kernel_integral,
    tail_integral,
    truncation_depth,
)
from fracperiod.signals import FourierSignal

SIN = FourierSignal.builtin("sin")
ZERO = FourierSignal.zero()
SQUARE = FourierSignal.builtin("square-wave-truncated", harmonics=5)
MIXED = FourierSignal(3.0, [0.0, 0.5 - 0.2j, 0.1j])

TWO_PI = 2 * math.pi


class TestTailIntegral:
    def test_single_period(self):
        expected = integrate.quad(
            lambda s: (1 - s) ** -0.5 * math.sin(s),
            -TWO_PI,
            0,
            epsabs=1e-13,
            limit=200,
        )[0]
        value = tail_integral(SIN, 0.5, 1.0, 1)
        assert value == pytest.approx(expected, abs=1e-10)
        assert abs(value) <= 2.0

    @pytest.mark.parametrize(
        "f, alpha, t, n",
        list(
            itertools.product(
                [SIN, SQUARE, MIXED], [0.3, 0.7], [0.5, 1.0, 5.0], [1, 5, 50]
            )
        ),
    )
    def test_mass_bound(self, f, alpha, t, n):
        mass = f.positive_part_mass()
        assert abs(tail_integral(f, alpha, t, n)) <= (
            mass * t ** (alpha - 1) + 1e-12
        )

    def test_monotone_truncation(self):
        diff = tail_integral(SIN, 0.5, 1.0, 50) - tail_integral(
            SIN, 0.5, 1.0, 49
        )
        assert abs(diff) <= TWO_PI * (49 * TWO_PI) ** -0.5

    def test_zero_signal(self):
        assert tail_integral(ZERO, 0.5, 1.0, 10) == 0.0

    def test_invalid(self):
        with pytest.raises(ValueError):
            tail_integral(SIN, 1.2, 1.0, 1)
        with pytest.raises(ValueError):
            tail_integral(SIN, 0.5, 1.0, 0)
        with pytest.raises(NonPositiveTime):
            tail_integral(SIN, 0.5, 0.0, 1)


class TestSmoothKernelIntegral:
    @pytest.mark.parametrize("gap", [1.0, 1e-1, 1e-3])
    def test_near_singularity(self, gap):
        expected = integrate.quad(
            lambda s: (1 + gap - s) ** -0.5 * math.cos(s),
            0,
            1,
            epsabs=1e-13,
            epsrel=1e-12,
            limit=200,
        )[0]
        assert smooth_kernel_integral(
            np.cos, -0.5, 0.0, 1.0, 1 + gap, TWO_PI
        ) == pytest.approx(expected, abs=1e-10)

    def test_empty_interval(self):
        assert smooth_kernel_integral(np.cos, -0.5, 1.0, 1.0, 2.0, 1.0) == 0

    def test_singular_kernel(self):
        with pytest.raises(NonPositiveTime):
            smooth_kernel_integral(np.cos, -0.5, 0.0, 1.0, 1.0, TWO_PI)


class TestTruncationDepth:
    def test_sup_norm_bound(self):
        depth = truncation_depth(0.5, TWO_PI, 1.0, 1e-4, 1.0)
        assert depth.periods == 15915495
        assert int(depth) == 15915495
        assert not depth.impractical

    def test_bound_already_met(self):
        assert truncation_depth(0.5, TWO_PI, 1.0, 1.0, 1.0).periods == 1

    def test_saturation(self):
        depth = truncation_depth(0.9, 1.0, 1.0, 1e-3, 1.0)
        assert depth.periods == sys.maxsize
        assert depth.impractical
        assert depth.log10_periods == pytest.approx(30.0)

    def test_impractical_without_saturation(self):
        depth = truncation_depth(0.5, 1.0, 1.0, 1e-5, 1.0)
        assert abs(depth.periods - 10**10) <= 1
        assert depth.impractical

    @pytest.mark.parametrize(
        "alpha, eps", list(itertools.product([0.3, 0.5, 0.7], [1e-3, 1e-6]))
    )
    def test_mass_bound(self, alpha, eps):
        t, mass = 1.0, 2.0
        depth = truncation_depth(alpha, TWO_PI, t, eps, 1.0, mass=mass)
        if depth.impractical:
            needed = (math.log10(mass / eps) / (1 - alpha)) - math.log10(
                TWO_PI
            )
            assert depth.log10_periods == pytest.approx(needed, abs=0.01)
            assert depth.log10_periods > 8
            return
        n = depth.periods
        assert mass * (n * TWO_PI + t) ** (alpha - 1) <= eps * (1 + 1e-12)
        if n > 1:
            assert mass * ((n - 1) * TWO_PI + t) ** (alpha - 1) > eps

    def test_sharper_with_mass(self):
        plain = truncation_depth(0.5, TWO_PI, 1.0, 1e-4, 1.0)
        sharp = truncation_depth(0.5, TWO_PI, 1.0, 1e-4, 1.0, mass=0.5)
        assert sharp.periods < plain.periods

    @pytest.mark.parametrize(
        "alpha, eps", [(0.0, 1e-3), (1.0, 1e-3), (0.5, 0.0), (0.5, -1.0)]
    )
    def test_invalid(self, alpha, eps):
        with pytest.raises(ValueError):
            truncation_depth(alpha, TWO_PI, 1.0, eps, 1.0)
