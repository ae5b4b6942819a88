import itertools
import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np
import pytest
from scipy import integrate

from fracperiod.signals import (
    FourierSignal,
    NonConjugateSymmetric,
    NonZeroMean,
)

TWO_PI = 2 * math.pi

SIN = FourierSignal.builtin("sin")
COS = FourierSignal.builtin("cos")
ONE = FourierSignal.builtin("const")
ZERO = FourierSignal.zero()
SIN_PLUS_ONE = FourierSignal.builtin("sin", offset=1.0)
SQUARE = FourierSignal.builtin("square-wave-truncated", harmonics=5)
MIXED = FourierSignal.from_harmonics(
    3.0, {0: 0.0, 1: 0.3 - 0.2j, -1: 0.3 + 0.2j, 3: 0.1j, -3: -0.1j}
)

SIGNALS = [SIN, COS, ONE, ZERO, SIN_PLUS_ONE, SQUARE, MIXED]
MEAN_ZERO_SIGNALS = [SIN, COS, SQUARE, MIXED, 2 * SIN]
TIMES = [-7.3, -1.0, 0.0, 0.5, math.pi / 2, 3.0, 12.25, 101.0]


class TestFourierSignal:
    def test_invalid_construction(self):
        with pytest.raises(ValueError):
            FourierSignal(0.0, [1.0])
        with pytest.raises(ValueError):
            FourierSignal(-1.0, [1.0])
        with pytest.raises(ValueError):
            FourierSignal(TWO_PI, [])
        with pytest.raises(NonConjugateSymmetric):
            FourierSignal(TWO_PI, [1j])

    def test_from_harmonics_rejects_non_conjugate(self):
        with pytest.raises(NonConjugateSymmetric):
            FourierSignal.from_harmonics(TWO_PI, {1: 0.5j, -1: 0.5j})
        with pytest.raises(NonConjugateSymmetric):
            FourierSignal.from_harmonics(TWO_PI, {1: 0.5})
        with pytest.raises(NonConjugateSymmetric):
            FourierSignal.from_harmonics(
                TWO_PI, {1: 0.5 + 1e-17j, -1: 0.5 - 2e-17j}
            )

    def test_from_harmonics(self):
        f = FourierSignal.from_harmonics(TWO_PI, {0: 2.5, 1: -0.5j, -1: 0.5j})
        assert f.mean() == 2.5
        assert f.degree == 1
        assert f.eval(math.pi / 2) == pytest.approx(3.5, abs=1e-15)
        assert f.harmonics == {-1: 0.5j, 0: 2.5 + 0j, 1: -0.5j}

    def test_builtin(self):
        assert SIN.eval(math.pi / 2) == pytest.approx(1.0, abs=1e-15)
        assert COS.eval(0.0) == pytest.approx(1.0, abs=1e-15)
        assert ONE.eval(12.3) == 1.0
        assert SIN_PLUS_ONE.eval(0.0) == pytest.approx(1.0, abs=1e-15)
        f = FourierSignal.builtin("sin", period=4.0, amplitude=3.0)
        assert f.eval(1.0) == pytest.approx(3.0, abs=1e-14)
        assert SQUARE.eval(math.pi / 2) == pytest.approx(
            4 / math.pi * sum((-1) ** j / (2 * j + 1) for j in range(3)),
            abs=1e-14,
        )
        with pytest.raises(ValueError):
            FourierSignal.builtin("triangle")
        with pytest.raises(ValueError):
            FourierSignal.builtin("square-wave-truncated", harmonics=0)

    @pytest.mark.parametrize("f, t", list(itertools.product(SIGNALS, TIMES)))
    def test_eval_periodic(self, f, t):
        assert abs(f.eval(t + f.period) - f.eval(t)) <= 1e-12 * (
            1 + f.sup_norm()
        )

    def test_eval_vectorized(self):
        ts = np.linspace(-5, 5, 41)
        np.testing.assert_allclose(SIN.eval(ts), np.sin(ts), atol=1e-14)
        np.testing.assert_allclose(MIXED(ts), [MIXED(t) for t in ts])
        assert isinstance(SIN.eval(1.0), float)

    def test_mean(self):
        assert SIN.mean() == 0.0
        assert SIN_PLUS_ONE.mean() == 1.0
        assert FourierSignal(TWO_PI, [2.5, 1.0]).mean() == 2.5
        assert SIN.has_zero_mean()
        assert not SIN_PLUS_ONE.has_zero_mean()
        assert FourierSignal(TWO_PI, [1e-15, 0.5]).has_zero_mean()

    @pytest.mark.parametrize("f", SIGNALS)
    def test_mean_of_derivative(self, f):
        assert f.differentiate().mean() == 0.0

    def test_sup_norm(self):
        assert SIN.sup_norm() == pytest.approx(1.0, abs=1e-9)
        assert (3 * ONE).sup_norm() == 3.0
        assert ZERO.sup_norm() == 0.0
        assert (0.5 * SIN + 0.5 * COS).sup_norm() == pytest.approx(
            math.sqrt(2) / 2, abs=1e-9
        )

    def test_sup_norm_threads(self):
        signals = [(1 + k / 8) * SQUARE + k * COS for k in range(16)] * 4
        with ThreadPoolExecutor(max_workers=8) as pool:
            norms = list(pool.map(lambda f: f.sup_norm(), signals))
        ts = np.linspace(0, TWO_PI, 20001)
        for f, norm in zip(signals, norms):
            assert norm == f.sup_norm()
            assert norm == pytest.approx(
                np.max(np.abs(f.eval(ts))), rel=1e-6
            )

    @pytest.mark.parametrize("f", SIGNALS)
    def test_sup_norm_bracket(self, f):
        lower, upper = f.sup_norm_bracket()
        assert lower <= f.sup_norm() <= upper

    def test_positive_part_mass(self):
        assert SIN.positive_part_mass() == pytest.approx(2.0, abs=1e-10)
        assert (2 * SIN).positive_part_mass() == pytest.approx(
            4.0, abs=1e-10
        )
        assert ZERO.positive_part_mass() == 0.0
        with pytest.raises(NonZeroMean):
            SIN_PLUS_ONE.positive_part_mass()

    @pytest.mark.parametrize("f", MEAN_ZERO_SIGNALS)
    def test_positive_part_mass_symmetry(self, f):
        mass = f.positive_part_mass()
        assert mass == pytest.approx((-f).positive_part_mass(), abs=1e-9)
        oracle = integrate.quad(
            lambda t: max(f.eval(t), 0.0),
            0,
            f.period,
            limit=500,
            epsabs=1e-12,
        )[0]
        assert mass == pytest.approx(oracle, abs=1e-7)

    def test_differentiate(self):
        ts = np.linspace(0, 10, 17)
        np.testing.assert_allclose(
            SIN.differentiate().eval(ts), COS.eval(ts), atol=1e-14
        )
        assert ONE.differentiate().is_zero()
        cos2 = FourierSignal(TWO_PI, [0.0, 0.0, 0.5])
        np.testing.assert_allclose(
            cos2.differentiate().eval(ts), -2 * np.sin(2 * ts), atol=1e-13
        )

    def test_antiderivative(self):
        primitive = SIN_PLUS_ONE.antiderivative()
        assert primitive.mean() == 0.0
        ts = np.linspace(0, 10, 17)
        np.testing.assert_allclose(
            primitive.eval(ts), -np.cos(ts), atol=1e-14
        )

    def test_arithmetic(self):
        f = SIN + 1.0
        assert f == SIN_PLUS_ONE
        assert (SIN - SIN).is_zero()
        assert (1.0 + SIN).mean() == 1.0
        assert (-SIN).eval(math.pi / 2) == pytest.approx(-1.0)
        assert SIN.without_mean() == SIN
        assert SIN_PLUS_ONE.without_mean() == SIN
        with pytest.raises(ValueError):
            SIN + FourierSignal.builtin("sin", period=1.0)

    def test_with_period(self):
        f = SIN.with_period(1.0)
        assert f.eval(0.25) == pytest.approx(1.0)
        assert f.coeffs == SIN.coeffs

    def test_hashable(self):
        assert len({SIN, FourierSignal.builtin("sin"), COS}) == 2
