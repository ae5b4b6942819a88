import math
import sys
from typing import Optional, Union

import attr
import numpy as np

from fracperiod.quadrature.config import FracOrder
from fracperiod.quadrature.product import NonPositiveTime
from fracperiod.signals import FourierSignal
from fracperiod.typings import RealFunc

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(20)

# Beyond this number of periods a truncated sum is not worth computing.
MAX_PRACTICAL_PERIODS = 1e8


class DepthImpractical(Exception):
    """Base exception class for a truncation of the memory of a Weyl
    integral that would need too many periods.

    """

    pass


@attr.s(frozen=True, slots=True)
class TruncationDepth:
    """Number of whole periods kept by a truncated memory integral.

    Attributes:
        impractical: True if the number of periods exceeds 1e8, False
            otherwise.
        log10_periods: The decimal logarithm of the exact, unrounded number
            of periods.
        periods: The number of periods, saturated at sys.maxsize.

    """

    periods = attr.ib(type=int)
    impractical = attr.ib(type=bool)
    log10_periods = attr.ib(type=float)

    def __int__(self) -> int:
        return self.periods


def smooth_kernel_integral(
    func: RealFunc,
    beta: float,
    a: float,
    b: float,
    c: float,
    period: float,
    harmonics: int = 1,
) -> float:
    """Integrates (c - s)^beta func(s) over [a, b] when c > b, so that the
    kernel stays smooth on the interval.

    Gauss-Legendre panels of width at most half a period of the highest
    harmonic cover [a, b]; the last one is halved repeatedly until its width
    is below the distance c - b.

    Args:
        func: The vectorized function.
        beta: The exponent of the kernel.
        a: The lower end.
        b: The upper end.
        c: The singular point of the kernel, > b.
        period: The period of func.
        harmonics: The highest harmonic of func.
            Defaults to 1.

    Returns:
        The integral.

    Raises:
        NonPositiveTime: If c <= b.

    """
    if not c > b:
        raise NonPositiveTime(f"the kernel is singular on [{a}, {b}]")
    if b <= a:
        return 0.0
    width = period / max(4, 2 * harmonics)
    n = math.ceil((b - a) / width)
    breaks = list(np.linspace(a, b, n + 1)[:-1])
    last = (b - a) / n
    while last > c - b:
        last /= 2
        breaks.append(b - last)
    breaks.append(b)
    edges = np.asarray(breaks)
    lo, hi = edges[:-1, None], edges[1:, None]
    s = 0.5 * (lo + hi) + 0.5 * (hi - lo) * _GL_NODES
    weights = 0.5 * (hi - lo) * _GL_WEIGHTS * (c - s) ** beta
    return float(np.sum(weights * np.asarray(func(s), dtype=float)))


def tail_integral(
    f: FourierSignal,
    alpha: Union[FracOrder, float],
    t: float,
    n: int,
) -> float:
    """Computes the memory of the last n periods before time 0.

    Args:
        f: The signal.
        alpha: The order, in (0, 1).
        t: The time, > 0.
        n: The number of periods, >= 1.

    Returns:
        int_{-nT}^0 (t - s)^(alpha - 1) f(s) ds, without 1 / Gamma(alpha).

    Raises:
        NonPositiveTime: If t <= 0.
        ValueError: If the order is not in (0, 1) or n < 1.

    """
    alpha = float(alpha)
    if not 0 < alpha < 1:
        raise ValueError(f"'alpha' must be in (0, 1) (got {alpha})")
    if n < 1:
        raise ValueError(f"'n' must be >= 1 (got {n})")
    if not t > 0:
        raise NonPositiveTime(f"'t' must be > 0 (got {t})")
    if f.is_zero():
        return 0.0
    return smooth_kernel_integral(
        f.eval, alpha - 1, -n * f.period, 0.0, t, f.period, f.degree
    )


def truncation_depth(
    alpha: Union[FracOrder, float],
    T: float,
    t: float,
    eps: float,
    f_sup: float,
    mass: Optional[float] = None,
) -> TruncationDepth:
    """Selects how many periods of memory keep the discarded part of a
    memory integral below a tolerance.

    Without mass, the discarded part after n periods is bounded by
    t (nT)^(alpha - 1) f_sup. With the positive part mass c of a mean-zero
    signal, the sharper bound c (nT + t)^(alpha - 1) is used instead. The
    computation runs in log space and saturates at sys.maxsize.

    Args:
        alpha: The order, in (0, 1).
        T: The period.
        t: The time, > 0.
        eps: The tolerance, > 0.
        f_sup: The sup norm of the signal.
        mass: The positive part mass of a mean-zero signal.
            Defaults to None.

    Returns:
        The number of periods, flagged impractical above 1e8.

    """
    alpha = float(alpha)
    if not 0 < alpha < 1:
        raise ValueError(f"'alpha' must be in (0, 1) (got {alpha})")
    if not eps > 0:
        raise ValueError(f"'eps' must be > 0 (got {eps})")

    if mass is not None:
        if mass <= 0 or mass * (T + t) ** (alpha - 1) <= eps:
            return TruncationDepth(1, False, 0.0)
        log_span = (math.log(eps) - math.log(mass)) / (alpha - 1)
        if log_span < 700:
            span = max(math.exp(log_span) - t, T)
            log_n = math.log(span) - math.log(T)
        else:
            log_n = log_span - math.log(T)
    else:
        if f_sup <= 0 or t * T ** (alpha - 1) * f_sup <= eps:
            return TruncationDepth(1, False, 0.0)
        log_span = (math.log(eps) - math.log(t) - math.log(f_sup)) / (
            alpha - 1
        )
        log_n = log_span - math.log(T)

    log10_n = log_n / math.log(10)
    if log10_n >= 18:
        return TruncationDepth(sys.maxsize, True, log10_n)
    periods = max(1, math.ceil(math.exp(log_n)))
    return TruncationDepth(
        periods, periods > MAX_PRACTICAL_PERIODS, log10_n
    )
