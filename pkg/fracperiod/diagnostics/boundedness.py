import math
import time
import warnings
from typing import Optional

import numpy as np

from fracperiod.diagnostics.report import (
    Boundedness,
    BoundednessVerdict,
    GrowthFit,
)
from fracperiod.operators import RLIntegral, weyl_grid
from fracperiod.quadrature import FracOrder, QuadratureConfig
from fracperiod.signals import FourierSignal, ZeroMean
from fracperiod.typings import Grid


def probe_grid(period: float, periods: int = 40) -> np.ndarray:
    """Returns the default probe grid: 33 points evenly spaced on [0, T]
    followed by 96 points log-spaced on (T, periods * T].

    """
    return np.concatenate(
        [
            np.linspace(0, period, 33),
            np.geomspace(period, periods * period, 97)[1:],
        ]
    )


def _integral(
    alpha: float,
    cfg: QuadratureConfig,
    integral: Optional[RLIntegral],
    verbose: int,
) -> RLIntegral:
    if integral is None:
        return RLIntegral(alpha, config=cfg, verbose=verbose)
    if integral.alpha != alpha:
        raise ValueError(
            f"the integral has order {integral.alpha}, not {alpha}"
        )
    return integral


def classify_boundedness(
    f: FourierSignal,
    alpha: float,
    cfg: QuadratureConfig = QuadratureConfig(),
    grid: Optional[Grid] = None,
    integral: Optional[RLIntegral] = None,
    verbose: int = 0,
) -> BoundednessVerdict:
    """Decides whether I^alpha f is bounded, which holds if and only if the
    mean of f is zero.

    Args:
        f: The signal.
        alpha: The order, in (0, 1).
        cfg: The quadrature configuration.
            Defaults to QuadratureConfig().
        grid: The probe times of the witness bound.
            Defaults to probe_grid(f.period).
        integral: The integral operator to reuse, with its cache.
            Defaults to None.
        verbose: The verbosity level.
            Defaults to 0.

    Returns:
        The verdict, with the largest |I^alpha f| on the probe grid when
        bounded. The mean tolerance is 1e-12 * (1 + sup|f|).

    """
    FracOrder(alpha, 1.0)
    tic = time.perf_counter()
    mean = f.mean()
    if not f.has_zero_mean():
        if mean > 0:
            return BoundednessVerdict(Boundedness.DIVERGES_PLUS, mean)
        return BoundednessVerdict(Boundedness.DIVERGES_MINUS, mean)

    ts = probe_grid(f.period) if grid is None else np.asarray(grid, float)
    values = _integral(alpha, cfg, integral, verbose).evaluate_grid(f, ts)
    witness = float(np.max(np.abs(values))) if len(values) > 0 else 0.0
    toc = time.perf_counter()
    if verbose >= 1:
        print(
            f"Probed I^{alpha} f on {len(ts)} points, witness bound "
            + f"{witness:.6g} ({toc - tic:0.4f}s)"
        )
    return BoundednessVerdict(Boundedness.BOUNDED, mean, witness)


def growth_fit(
    f: FourierSignal,
    alpha: float,
    t_grid: Grid,
    cfg: QuadratureConfig = QuadratureConfig(),
    integral: Optional[RLIntegral] = None,
    verbose: int = 0,
) -> GrowthFit:
    """Fits the power law C t^p to a divergent I^alpha f on the upper half
    of a grid.

    The periodic part, the Weyl integral of f - mean(f), is removed before
    the least squares fit of the signed values in log-log scale; the fit
    then recovers p = alpha and C = mean(f) / Gamma(1 + alpha) up to a
    decaying term.

    Args:
        f: The signal.
        alpha: The order, in (0, 1).
        t_grid: The times, the upper half of which is fitted.
        cfg: The quadrature configuration.
            Defaults to QuadratureConfig().
        integral: The integral operator to reuse, with its cache.
            Defaults to None.
        verbose: The verbosity level.
            Defaults to 0.

    Returns:
        The fitted exponent and constant.

    Raises:
        ZeroMean: If the mean of the signal is zero.
        ValueError: If fewer than two samples have the sign of the mean.

    """
    FracOrder(alpha, 1.0)
    if f.has_zero_mean():
        raise ZeroMean("a growth fit needs a signal with a non-zero mean")
    ts = np.sort(np.asarray(t_grid, dtype=float))
    ts = ts[ts > 0]
    upper = ts[len(ts) // 2 :]

    values = _integral(alpha, cfg, integral, verbose).evaluate_grid(f, upper)
    values = values - weyl_grid(f.without_mean(), alpha, upper)
    sign = math.copysign(1.0, f.mean())
    keep = sign * values > 0
    if not np.all(keep):
        warnings.warn(
            f"{int(np.sum(~keep))} samples without the sign of the mean "
            + "were left out of the growth fit",
            category=RuntimeWarning,
            stacklevel=2,
        )
    if np.sum(keep) < 2:
        raise ValueError("a growth fit needs at least two valid samples")
    slope, intercept = np.polyfit(
        np.log(upper[keep]), np.log(sign * values[keep]), 1
    )
    return GrowthFit(float(slope), float(sign * math.exp(intercept)))
