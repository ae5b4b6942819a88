import itertools
import math

import numpy as np
import pytest

from fracperiod.diagnostics import (
    DefectCurve,
    defect_at,
    defect_bound,
    nonperiodicity_certificate,
    sap_defect,
)
from fracperiod.operators import RLIntegral
from fracperiod.signals import FourierSignal

SIN = FourierSignal.builtin("sin")
ZERO = FourierSignal.zero()

NONZERO_SIGNALS = [
    SIN,
    FourierSignal.builtin("cos"),
    FourierSignal.builtin("square-wave-truncated", harmonics=5),
    FourierSignal.builtin("sin", offset=1.0),
    FourierSignal.builtin("sin", offset=-2.0),
    FourierSignal(2 * math.pi, [0.0, 0.5, -0.5]),
    FourierSignal(3.0, [0.25, 0.5 - 0.2j, 0.1j]),
    FourierSignal.builtin("sin", period=1.0),
    FourierSignal.builtin("const"),
    FourierSignal.builtin("cos", period=2 * math.pi / 3),
]
ORDERS = [0.25, 0.5, 0.75]

RNG = np.random.RandomState(31)


def random_signal(rng):
    degree = rng.randint(1, 5)
    coeffs = [rng.normal()] + list(
        rng.normal(size=degree) + 1j * rng.normal(size=degree)
    )
    return FourierSignal(rng.uniform(1, 10), coeffs)


BOUND_CASES = []
for _ in range(50):
    f = random_signal(RNG)
    BOUND_CASES.append(
        (f, RNG.uniform(0.05, 0.95), f.period * RNG.uniform(1, 100))
    )

IDENTITY_CASES = [
    (random_signal(RNG), RNG.uniform(0.05, 0.95), RNG.uniform(0.1, 20))
    for _ in range(50)
]


class TestDefect:
    def test_bound_value(self):
        bound = defect_bound(SIN, 0.5, 100.0)
        assert bound == pytest.approx(0.3545, abs=1e-4)
        assert abs(defect_at(SIN, 0.5, 100.0)) <= bound

    @pytest.mark.parametrize("f, alpha, t", BOUND_CASES)
    def test_bound(self, f, alpha, t):
        assert abs(defect_at(f, alpha, t)) <= (
            defect_bound(f, alpha, t) + 1e-8
        )

    @pytest.mark.parametrize("f, alpha, t", IDENTITY_CASES)
    def test_identity(self, f, alpha, t):
        integral = RLIntegral(alpha)
        shifted = integral.evaluate(f, t + f.period) - integral.evaluate(
            f, t
        )
        assert defect_at(f, alpha, t) == pytest.approx(
            shifted, abs=1e-8 * (1 + (t + f.period) ** alpha)
        )

    def test_zero_signal(self):
        curve = sap_defect(ZERO, 0.5, [1.0, 10.0, 100.0])
        assert all(d == 0.0 for _, d in curve.samples)
        assert all(b == 0.0 for _, b in curve.bound_samples)
        assert curve.max_defect() == 0.0

    def test_curve(self):
        ts = np.geomspace(0.5, 200, 25)
        curve = sap_defect(SIN, 0.5, ts)
        assert isinstance(curve, DefectCurve)
        assert curve.period == 2 * math.pi
        assert [t for t, _ in curve.samples] == pytest.approx(list(ts))
        assert curve.violations() == []
        assert curve.max_defect() == max(abs(d) for _, d in curve.samples)

    @pytest.mark.parametrize(
        "f", [SIN, FourierSignal.builtin("sin", offset=1.0)]
    )
    def test_envelope(self, f):
        ts = np.geomspace(10, 400, 80)
        curve = sap_defect(f, 0.5, ts)
        size = np.abs([d for _, d in curve.samples])
        early = np.max(size[(ts >= 10) & (ts <= 20)])
        late = np.max(size[(ts >= 100) & (ts <= 200)])
        assert late <= 2 * early * (10 / 100) ** 0.5

    def test_invalid(self):
        with pytest.raises(ValueError):
            sap_defect(SIN, 0.5, [0.0, 1.0])
        with pytest.raises(ValueError):
            sap_defect(SIN, 1.0, [1.0])
        with pytest.raises(ValueError):
            defect_at(SIN, 0.5, -1.0)


class TestNonperiodicityCertificate:
    def test_sin(self):
        cert = nonperiodicity_certificate(SIN, 0.5)
        assert cert.delta > 0.1
        assert 0 < cert.t_star <= 6 * math.pi
        assert cert.delta == pytest.approx(
            abs(defect_at(SIN, 0.5, cert.t_star))
        )

    @pytest.mark.parametrize(
        "f, alpha", list(itertools.product(NONZERO_SIGNALS, ORDERS))
    )
    def test_nonzero_signals(self, f, alpha):
        assert nonperiodicity_certificate(f, alpha).delta > 1e-3

    def test_zero_signal(self):
        with pytest.raises(ValueError):
            nonperiodicity_certificate(ZERO, 0.5)
