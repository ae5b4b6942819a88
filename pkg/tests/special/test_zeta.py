import itertools
import math

import mpmath
import numpy as np
import pytest
from scipy import integrate

from fracperiod.special import (
    gamma,
    hurwitz_zeta,
    weyl_kernel_g,
    weyl_kernel_g_truncated,
    weyl_kernel_regular,
)

RNG = np.random.RandomState(7)
ORDERS = [0.25, 0.5, 0.75]
SHIFTS = [0.1, 0.5, 1.0, 3.7]


class TestHurwitzZeta:
    def test_classical_value(self):
        assert hurwitz_zeta(-1, 1) == pytest.approx(-1 / 12, rel=1e-12)
        assert hurwitz_zeta(2, 1) == pytest.approx(math.pi**2 / 6, rel=1e-13)

    @pytest.mark.parametrize(
        "alpha, q", list(itertools.product(ORDERS, SHIFTS))
    )
    def test_oracle(self, alpha, q):
        assert hurwitz_zeta(1 - alpha, q) == pytest.approx(
            float(mpmath.zeta(1 - alpha, q)), rel=1e-12, abs=1e-12
        )

    def test_recurrence(self):
        for alpha, q in zip(
            RNG.uniform(0.05, 0.95, 50), RNG.uniform(0.1, 5, 50)
        ):
            s = 1 - alpha
            assert hurwitz_zeta(s, q) == pytest.approx(
                q ** (alpha - 1) + hurwitz_zeta(s, q + 1), rel=1e-12, abs=1e-12
            )

    def test_invalid(self):
        with pytest.raises(ValueError):
            hurwitz_zeta(1, 1.0)
        with pytest.raises(ValueError):
            hurwitz_zeta(0.5, 0.0)


class TestWeylKernel:
    @pytest.mark.parametrize("alpha", ORDERS)
    def test_singular_term(self, alpha):
        s = 1e-16
        ratio = weyl_kernel_g(s, alpha) * gamma(alpha)
        ratio /= 2 * math.pi * s ** (alpha - 1)
        assert ratio == pytest.approx(1.0, abs=1e-3)

    @pytest.mark.parametrize(
        "s, alpha",
        list(itertools.product([0.1, 1.0, 3.0, 2 * math.pi], ORDERS)),
    )
    def test_regular_part(self, s, alpha):
        singular = 2 * math.pi * s ** (alpha - 1) / gamma(alpha)
        assert weyl_kernel_g(s, alpha) == pytest.approx(
            singular + weyl_kernel_regular(s, alpha), rel=1e-10
        )

    @pytest.mark.parametrize(
        "s, alpha", list(itertools.product([1.0, 4.0], ORDERS))
    )
    def test_truncated_limit(self, s, alpha):
        exact = weyl_kernel_g(s, alpha)
        for n in (10**4, 10**5):
            error = weyl_kernel_g_truncated(s, alpha, n) - exact
            scale = (s + math.pi) * (2 * math.pi * n) ** (alpha - 1)
            assert error * gamma(alpha) == pytest.approx(scale, rel=0.05)

    def test_truncated_chunks(self):
        assert weyl_kernel_g_truncated(1.0, 0.5, 1000, chunk=7) == (
            pytest.approx(weyl_kernel_g_truncated(1.0, 0.5, 1000), rel=1e-13)
        )

    @pytest.mark.parametrize(
        "alpha, t", list(itertools.product(ORDERS, [0.0, 1.0, 3.0]))
    )
    def test_reconstruction(self, alpha, t):
        value = integrate.quad(
            lambda s: math.sin(t - s) * weyl_kernel_g(s, alpha),
            0,
            2 * math.pi,
            limit=200,
            epsabs=1e-12,
        )[0]
        assert value / (2 * math.pi) == pytest.approx(
            math.sin(t - alpha * math.pi / 2), abs=1e-6
        )
