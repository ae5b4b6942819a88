"""Independent evaluations of the Riemann-Liouville integral, by adaptive
Gauss-Kronrod quadrature (QUADPACK).

"""
import math
from typing import Callable, Union

from scipy import integrate, special

from fracperiod.quadrature.config import FracOrder, QuadratureConfig
from fracperiod.quadrature.product import NonPositiveTime
from fracperiod.signals import FourierSignal

_LIMIT = 200


def oracle_singular_integral(
    f: FourierSignal,
    alpha: Union[FracOrder, float],
    t: float,
    cfg: QuadratureConfig = QuadratureConfig(),
) -> float:
    """Computes the Riemann-Liouville integral of a signal after the change
    of variables v = (t - s)^alpha, which removes the singularity.

    The v axis is split at the images of whole periods so that every piece
    sees at most one period of the signal.

    Args:
        f: The signal.
        alpha: The order, in (0, 2).
        t: The time, > 0.
        cfg: The quadrature configuration.
            Defaults to QuadratureConfig().

    Returns:
        (1 / Gamma(alpha + 1)) * int_0^(t^alpha) f(t - v^(1 / alpha)) dv.

    Raises:
        NonPositiveTime: If t <= 0.

    """
    alpha = float(alpha)
    if not t > 0:
        raise NonPositiveTime(f"'t' must be > 0 (got {t})")
    if f.is_zero():
        return 0.0

    period = f.period / max(1, f.degree)
    n = int(t // period)
    breaks = [0.0] + [(j * period) ** alpha for j in range(1, n + 1)]
    if breaks[-1] < t**alpha:
        breaks.append(t**alpha)

    def integrand(v: float) -> float:
        return f.eval(t - v ** (1 / alpha))

    total = math.fsum(
        integrate.quad(
            integrand,
            lo,
            hi,
            epsabs=cfg.abs_tol,
            epsrel=cfg.rel_tol,
            limit=_LIMIT,
        )[0]
        for lo, hi in zip(breaks[:-1], breaks[1:])
    )
    return total / special.gamma(alpha + 1)


def singular_integral_of(
    func: Callable[[float], float],
    alpha: Union[FracOrder, float],
    t: float,
    cfg: QuadratureConfig = QuadratureConfig(),
) -> float:
    """Computes the Riemann-Liouville integral of any scalar function,
    using the algebraic endpoint weight of QUADPACK.

    Args:
        func: The scalar function.
        alpha: The order, in (0, 2).
        t: The time, > 0.
        cfg: The quadrature configuration.
            Defaults to QuadratureConfig().

    Returns:
        (1 / Gamma(alpha)) * int_0^t (t - s)^(alpha - 1) func(s) ds.

    Raises:
        NonPositiveTime: If t <= 0.

    """
    alpha = float(alpha)
    if not t > 0:
        raise NonPositiveTime(f"'t' must be > 0 (got {t})")
    res = integrate.quad(
        func,
        0,
        t,
        weight="alg",
        wvar=(0, alpha - 1),
        epsabs=cfg.abs_tol,
        epsrel=cfg.rel_tol,
        limit=_LIMIT,
    )[0]
    return res / special.gamma(alpha)
