import attr

from fracperiod.operators.operator import Operator, OperatorKind
from fracperiod.quadrature import (
    NonPositiveTime,
    QuadratureConfig,
    singular_integral,
)
from fracperiod.signals import FourierSignal
from fracperiod.special import gamma


@attr.s
class RLIntegral(Operator):
    """Riemann-Liouville fractional integral from 0, of order in (0, 2).

    Orders in [1, 2) are split as I^(alpha - 1) applied to the primitive
    of the signal: the primitive of a Fourier series is the linear term
    mean * t plus a periodic signal, whose integral of order alpha - 1 is
    computed by quadrature.

    """

    kind = OperatorKind.RL_INTEGRAL

    def _evaluate(self, f: FourierSignal, t: float) -> float:
        if t < 0:
            raise NonPositiveTime(f"'t' must be >= 0 (got {t})")
        if t == 0:
            return 0.0
        if self.alpha < 1:
            return singular_integral(
                f, self.alpha, t, self.config, self.verbose
            )

        mean = f.mean()
        primitive = f.antiderivative()
        start = primitive.eval(0.0)
        linear = mean * t**self.alpha / gamma(self.alpha + 1)
        if self.alpha == 1:
            return linear + primitive.eval(t) - start
        periodic = singular_integral(
            primitive, self.alpha - 1, t, self.config, self.verbose
        )
        return (
            linear
            + periodic
            - start * t ** (self.alpha - 1) / gamma(self.alpha)
        )


def rl_integral(
    f: FourierSignal,
    alpha: float,
    t: float,
    cfg: QuadratureConfig = QuadratureConfig(),
) -> float:
    """Computes the Riemann-Liouville integral of a signal at one time.

    Args:
        f: The signal.
        alpha: The order, in (0, 2).
        t: The time, >= 0.
        cfg: The quadrature configuration.
            Defaults to QuadratureConfig().

    Returns:
        I^alpha f(t).

    """
    return RLIntegral(alpha, config=cfg).evaluate(f, t)

