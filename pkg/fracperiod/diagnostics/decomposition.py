import math
from typing import Iterable, List, Optional, Tuple

import numpy as np

from fracperiod.diagnostics.report import Decomposition
from fracperiod.operators import RLIntegral, WeylIntegral
from fracperiod.quadrature import FracOrder, QuadratureConfig
from fracperiod.signals import FourierSignal, NonZeroMean
from fracperiod.typings import Grid


def fit_decay(
    ts: Grid, remainder: Grid, floor: float = 0.0
) -> Optional[Tuple[float, float]]:
    """Fits |r(t)| ~ C t^p on the upper envelope of the upper half of the
    samples.

    When the magnitude oscillates, only its interior local maxima are kept.
    A kept sample then belongs to the envelope when no later one is larger,
    which skips the zeros of the oscillating terms.

    Args:
        ts: The increasing times, > 0.
        remainder: The remainder samples.
        floor: The magnitude at or below which a sample counts as zero.
            Defaults to 0.0.

    Returns:
        The (C, p) of the least squares fit in log-log scale, None if fewer
        than two samples are above the floor.

    """
    ts = np.asarray(ts, dtype=float)
    size = np.abs(np.asarray(remainder, dtype=float))
    keep = ts > 0
    ts, size = ts[keep], size[keep]
    half = len(ts) // 2
    ts, size = ts[half:], size[half:]

    peaks = np.zeros(len(size), dtype=bool)
    peaks[1:-1] = (size[1:-1] >= size[:-2]) & (size[1:-1] >= size[2:])
    peaks &= size > floor
    if np.sum(peaks) >= 2:
        ts, size = ts[peaks], size[peaks]

    envelope = np.maximum.accumulate(size[::-1])[::-1]
    on_envelope = (size >= envelope) & (size > floor)
    if np.sum(on_envelope) < 2:
        return None
    slope, intercept = np.polyfit(
        np.log(ts[on_envelope]), np.log(size[on_envelope]), 1
    )
    return math.exp(intercept), float(slope)


def decompose_asymptotic(
    f: FourierSignal,
    alpha: float,
    t_grid: Grid,
    cfg: QuadratureConfig = QuadratureConfig(),
    integral: Optional[RLIntegral] = None,
    verbose: int = 0,
) -> Decomposition:
    """Splits the integral of a mean-zero signal into its periodic part,
    the Weyl integral Phi, and the remainder r = I^alpha f - Phi.

    Args:
        f: The signal.
        alpha: The order, in (0, 1).
        t_grid: The times, >= 0.
        cfg: The quadrature configuration.
            Defaults to QuadratureConfig().
        integral: The integral operator to reuse, with its cache.
            Defaults to None.
        verbose: The verbosity level.
            Defaults to 0.

    Returns:
        The decomposition, whose decay fit is None for a vanishing
        remainder.

    Raises:
        NonZeroMean: If the mean of the signal is not zero.

    """
    FracOrder(alpha, 1.0)
    if not f.has_zero_mean():
        raise NonZeroMean(
            "the integral of a signal with a non-zero mean is unbounded "
            + f"(got mean {f.mean()})"
        )
    if integral is None:
        integral = RLIntegral(alpha, config=cfg, verbose=verbose)
    ts = np.sort(np.asarray(t_grid, dtype=float))
    if np.any(ts < 0):
        raise ValueError("the decomposition needs times >= 0")

    phi = WeylIntegral(alpha).transform(f)
    remainder = integral.evaluate_grid(f, ts) - phi.eval(ts)
    samples = [(float(t), float(r)) for t, r in zip(ts, remainder)]
    decay = fit_decay(ts, remainder, floor=10 * cfg.abs_tol)
    return Decomposition(phi, samples, decay)


def shift_sequence(
    f: FourierSignal,
    alpha: float,
    t: float,
    shifts: Iterable[int],
    cfg: QuadratureConfig = QuadratureConfig(),
) -> List[float]:
    """Computes I^alpha f(t + nT) for each shift n.

    For a mean-zero signal, the sequence converges to the Weyl integral at
    time t as n grows, like n^(alpha - 1).

    Args:
        f: The signal.
        alpha: The order, in (0, 2].
        t: The time, >= 0.
        shifts: The number of periods of each shift, >= 0.
        cfg: The quadrature configuration.
            Defaults to QuadratureConfig().

    Returns:
        The shifted values, in the order of the shifts.

    """
    integral = RLIntegral(alpha, config=cfg)
    res = []
    for n in shifts:
        if n < 0:
            raise ValueError(f"'shifts' must be >= 0 (got {n})")
        res.append(integral.evaluate(f, t + n * f.period))
    return res
