import attr

from fracperiod.operators.operator import Operator, OperatorKind
from fracperiod.quadrature import QuadratureConfig, singular_integral
from fracperiod.signals import FourierSignal
from fracperiod.special import gamma

# Below this time the Riemann-Liouville correction term is not evaluated.
SINGULAR_TIME = 1e-12


class SingularAtZero(Exception):
    """Base exception class for an evaluation too close to the singularity
    of the Riemann-Liouville derivative at time 0.

    """

    pass


@attr.s
class CaputoDerivative(Operator):
    """Caputo fractional derivative of order in (0, 1), computed as the
    integral of order 1 - alpha of the exact derivative of the signal.

    """

    kind = OperatorKind.CAPUTO_DERIVATIVE

    def _evaluate(self, f: FourierSignal, t: float) -> float:
        if t == 0:
            return 0.0
        return singular_integral(
            f.differentiate(), 1 - self.alpha, t, self.config, self.verbose
        )


@attr.s
class RLDerivative(CaputoDerivative):
    """Riemann-Liouville fractional derivative of order in (0, 1).

    It is the Caputo derivative plus the decaying term
    f(0) t^(-alpha) / Gamma(1 - alpha) rather than a numerical derivative of
    I^(1 - alpha) f.

    """

    kind = OperatorKind.RL_DERIVATIVE

    def correction(self, f: FourierSignal, t: float) -> float:
        """Returns the difference with the Caputo derivative at time t.

        Args:
            f: The signal.
            t: The time, > 0.

        Returns:
            f(0) t^(-alpha) / Gamma(1 - alpha).

        """
        return f.eval(0.0) * t ** (-self.alpha) / gamma(1 - self.alpha)

    def _evaluate(self, f: FourierSignal, t: float) -> float:
        if t < SINGULAR_TIME:
            raise SingularAtZero(
                f"'t' must be >= {SINGULAR_TIME:g} for the "
                + f"Riemann-Liouville derivative (got {t})"
            )
        return super()._evaluate(f, t) + self.correction(f, t)


def caputo_derivative(
    f: FourierSignal,
    alpha: float,
    t: float,
    cfg: QuadratureConfig = QuadratureConfig(),
) -> float:
    """Computes the Caputo derivative of a signal at one time.

    Args:
        f: The signal.
        alpha: The order, in (0, 1).
        t: The time, >= 0.
        cfg: The quadrature configuration.
            Defaults to QuadratureConfig().

    Returns:
        I^(1 - alpha) f'(t).

    """
    return CaputoDerivative(alpha, config=cfg).evaluate(f, t)


def rl_derivative(
    f: FourierSignal,
    alpha: float,
    t: float,
    cfg: QuadratureConfig = QuadratureConfig(),
) -> float:
    """Computes the Riemann-Liouville derivative of a signal at one time.

    Args:
        f: The signal.
        alpha: The order, in (0, 1).
        t: The time, >= 1e-12.
        cfg: The quadrature configuration.
            Defaults to QuadratureConfig().

    Returns:
        D^1 I^(1 - alpha) f(t).

    Raises:
        SingularAtZero: If t < 1e-12.

    """
    return RLDerivative(alpha, config=cfg).evaluate(f, t)
