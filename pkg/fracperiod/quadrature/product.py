"""Product integration of the Riemann-Liouville kernel.

In the lag variable u = t - s the integral reads
(1 / Gamma(alpha)) * int_0^t u^(alpha - 1) f(t - u) du. The lag axis is cut
into panels, graded near u = 0 over the first period and uniform beyond. On
each panel f is replaced by its cubic interpolant at four Chebyshev nodes and
the product of the cubic with u^(alpha - 1) is integrated exactly through the
panel moments of the kernel.

"""
import math
import time
from typing import Tuple, Union

import numpy as np
from scipy import special

from fracperiod.quadrature.config import FracOrder, QuadratureConfig
from fracperiod.signals import FourierSignal
from fracperiod.typings import RealFunc


class NonPositiveTime(Exception):
    """Base exception class for an integral from 0 to a time t <= 0."""

    pass


class ToleranceNotMet(Exception):
    """Base exception class for a quadrature whose error estimate is above
    the tolerance at the finest allowed mesh.

    """

    pass


_NODES = np.cos((2 * np.arange(4) + 1) * np.pi / 8)
_VANDER_INV = np.linalg.inv(np.vander(_NODES, 4, increasing=True))
_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(20)

# A panel is near the singularity when its midpoint is closer to u = 0 than
# three half-widths; there the moments are computed in closed form.
_NEAR = 3.0


def _order(alpha: Union[FracOrder, float]) -> float:
    return float(alpha)


def _mesh(
    t: float, period: float, panels: int, grading: float
) -> np.ndarray:
    """Returns the panel breakpoints on the lag axis [0, t].

    Args:
        t: The upper end.
        period: The length over which panels_per_period panels are laid.
        panels: The number of panels per period.
        grading: The grading exponent of the first period.

    Returns:
        The increasing breakpoints, from 0 to t.

    """
    length = min(t, period)
    n_graded = max(8, math.ceil(grading * panels * length / period))
    graded = length * (np.arange(n_graded + 1) / n_graded) ** grading
    if t <= length:
        return graded
    n_uniform = math.ceil(panels * (t - length) / period)
    uniform = np.linspace(length, t, n_uniform + 1)
    return np.concatenate([graded, uniform[1:]])


def _moments(a: np.ndarray, b: np.ndarray, beta: float) -> np.ndarray:
    """Returns the moments of u^beta y^m, m = 0..3, over each panel [a, b],
    with y the panel coordinate in [-1, 1].

    """
    c = 0.5 * (a + b)
    rho = 0.5 * (b - a)
    res = np.empty((len(a), 4))

    near = c <= _NEAR * rho
    if np.any(near):
        an, bn, cn, rn = a[near], b[near], c[near], rho[near]
        powers = [
            (bn ** (beta + k + 1) - an ** (beta + k + 1)) / (beta + k + 1)
            for k in range(4)
        ]
        for m in range(4):
            total = sum(
                math.comb(m, k) * (-cn) ** (m - k) * powers[k]
                for k in range(m + 1)
            )
            res[near, m] = total / rn**m

    far = ~near
    if np.any(far):
        cf, rf = c[far, None], rho[far, None]
        kernel = (cf + rf * _GL_NODES) ** beta * _GL_WEIGHTS * rf
        for m in range(4):
            res[far, m] = kernel @ _GL_NODES**m
    return res


def _rule(
    func: RealFunc,
    alpha: float,
    t: float,
    period: float,
    panels: int,
    grading: float,
) -> Tuple[float, float]:
    """Applies the product rule on one mesh.

    Returns:
        The value of the integral and the sum of the moduli of its weighted
        terms, both divided by Gamma(alpha).

    """
    u = _mesh(t, period, panels, grading)
    a, b = u[:-1], u[1:]
    weights = _moments(a, b, alpha - 1) @ _VANDER_INV
    nodes = 0.5 * (a + b)[:, None] + 0.5 * (b - a)[:, None] * _NODES
    terms = weights * np.asarray(func(t - nodes), dtype=float)
    norm = special.gamma(alpha)
    return float(np.sum(terms)) / norm, float(np.sum(np.abs(terms))) / norm


def product_integrate(
    func: RealFunc,
    alpha: Union[FracOrder, float],
    t: float,
    period: float,
    cfg: QuadratureConfig,
    verbose: int = 0,
) -> float:
    """Integrates a smooth vectorized function against the fractional
    integration kernel, with a two-level error estimate.

    Args:
        func: The vectorized function.
        alpha: The order, in (0, 2).
        t: The upper end, > 0.
        period: The length that holds panels_per_period panels, usually the
            period of the highest harmonic of func.
        cfg: The quadrature configuration.
        verbose: The verbosity level.
            0: does not display anything;
            1: does not display anything either;
            2: displays the estimate of each mesh level.
            Defaults to 0.

    Returns:
        The Richardson-extrapolated value of
        (1 / Gamma(alpha)) * int_0^t (t - s)^(alpha - 1) func(s) ds.

    Raises:
        NonPositiveTime: If t <= 0.
        ToleranceNotMet: If two successive mesh levels still disagree at
            the finest allowed mesh.

    """
    alpha = _order(alpha)
    if not t > 0:
        raise NonPositiveTime(f"'t' must be > 0 (got {t})")
    grading = cfg.grading(alpha)
    panels = cfg.panels_per_period
    coarse, _ = _rule(func, alpha, t, period, panels, grading)
    for _ in range(cfg.max_refinements + 1):
        panels *= 2
        fine, magnitude = _rule(func, alpha, t, period, panels, grading)
        err = abs(fine - coarse)
        tol = max(cfg.rel_tol * max(abs(fine), magnitude), cfg.abs_tol)
        if verbose == 2:
            print(f"> {panels} panels/period: {fine:.17g} (err {err:.3g})")
        if err <= tol:
            return fine + (fine - coarse) / 15
        coarse = fine
    raise ToleranceNotMet(
        f"error estimate {err:.3g} above tolerance {tol:.3g} at t = {t} "
        + f"with {panels} panels per period"
    )


def singular_integral(
    f: FourierSignal,
    alpha: Union[FracOrder, float],
    t: float,
    cfg: QuadratureConfig = QuadratureConfig(),
    verbose: int = 0,
) -> float:
    """Computes the Riemann-Liouville integral of a signal at one time.

    The panels per period scale with the highest harmonic of the signal.

    Args:
        f: The signal.
        alpha: The order, in (0, 2).
        t: The time, > 0.
        cfg: The quadrature configuration.
            Defaults to QuadratureConfig().
        verbose: The verbosity level.
            0: does not display anything;
            1: display the time spent;
            2: debugging.
            Defaults to 0.

    Returns:
        (1 / Gamma(alpha)) * int_0^t (t - s)^(alpha - 1) f(s) ds.

    Raises:
        NonPositiveTime: If t <= 0.
        ToleranceNotMet: If the tolerance is not met at the finest mesh.

    """
    tic = time.perf_counter()
    if f.is_zero():
        if not t > 0:
            raise NonPositiveTime(f"'t' must be > 0 (got {t})")
        return 0.0
    period = f.period / max(1, f.degree)
    res = product_integrate(f.eval, alpha, t, period, cfg, verbose)
    toc = time.perf_counter()
    if verbose >= 1:
        print(f"Integrated up to t = {t} ({toc - tic:0.4f}s)")
    return res
