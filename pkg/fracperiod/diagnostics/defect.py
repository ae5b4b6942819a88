import math

import numpy as np
from scipy import optimize

from fracperiod.diagnostics.report import (
    DefectCurve,
    NonperiodicityCertificate,
)
from fracperiod.quadrature import (
    FracOrder,
    QuadratureConfig,
    smooth_kernel_integral,
)
from fracperiod.signals import FourierSignal
from fracperiod.special import gamma
from fracperiod.typings import Grid

# Times 3T i / 65, i = 1, ..., 65, scanned for a non-periodicity witness.
CERTIFICATE_POINTS = 65


class CertificateNotFound(Exception):
    """Base exception class for a non-zero signal whose period defect stays
    below the quadrature tolerance, which cannot happen.

    """

    pass


def defect_at(f: FourierSignal, alpha: float, t: float) -> float:
    """Computes the period defect I^alpha f(t + T) - I^alpha f(t).

    The defect only involves the first period of f against the smooth
    kernel (t + T - s)^(alpha - 1), integrated over [0, T].

    Args:
        f: The signal.
        alpha: The order, in (0, 1).
        t: The time, > 0.

    Returns:
        The defect.

    Raises:
        ValueError: If t <= 0.

    """
    if not t > 0:
        raise ValueError(f"'t' must be > 0 (got {t})")
    if f.is_zero():
        return 0.0
    res = smooth_kernel_integral(
        f.eval, alpha - 1, 0.0, f.period, t + f.period, f.period, f.degree
    )
    return res / gamma(alpha)


def defect_bound(f: FourierSignal, alpha: float, t: float) -> float:
    """Returns T sup|f| t^(alpha - 1) / Gamma(alpha), which bounds the
    absolute period defect at time t.

    """
    return f.period * f.sup_norm() * t ** (alpha - 1) / gamma(alpha)


def sap_defect(
    f: FourierSignal,
    alpha: float,
    t_grid: Grid,
) -> DefectCurve:
    """Samples the period defect and its bound, which shows that I^alpha f
    is asymptotically periodic for every signal, with or without mean.

    Args:
        f: The signal.
        alpha: The order, in (0, 1).
        t_grid: The times, > 0.

    Returns:
        The defect curve.

    Raises:
        ValueError: If a time is not positive.

    """
    FracOrder(alpha, 1.0)
    ts = np.asarray(t_grid, dtype=float)
    if np.any(ts <= 0):
        raise ValueError("the period defect needs times > 0")
    samples = [(float(t), defect_at(f, alpha, t)) for t in ts]
    bounds = [(float(t), defect_bound(f, alpha, t)) for t in ts]
    return DefectCurve(alpha, f.period, samples, bounds)


def nonperiodicity_certificate(
    f: FourierSignal,
    alpha: float,
    cfg: QuadratureConfig = QuadratureConfig(),
) -> NonperiodicityCertificate:
    """Finds a time where the period defect is far from zero, which proves
    that I^alpha f is not T-periodic.

    The defect is scanned on (0, 3T], then its largest magnitude is refined
    between the neighbors of the best scanned time.

    Args:
        f: The signal.
        alpha: The order, in (0, 1).
        cfg: The quadrature configuration, whose tolerances set the
            threshold 10 max(abs_tol, rel_tol sup|f| T).
            Defaults to QuadratureConfig().

    Returns:
        The time t* and the magnitude of the defect there.

    Raises:
        CertificateNotFound: If the defect stays below the threshold.
        ValueError: If the signal is zero, whose integral is periodic.

    """
    FracOrder(alpha, 1.0)
    if f.is_zero():
        raise ValueError("the zero signal has a periodic integral")
    T = f.period
    ts = 3 * T * np.arange(1, CERTIFICATE_POINTS + 1) / CERTIFICATE_POINTS
    defects = np.abs([defect_at(f, alpha, t) for t in ts])
    i = int(np.argmax(defects))
    t_star, delta = float(ts[i]), float(defects[i])

    lower = ts[i - 1] if i > 0 else 0.5 * ts[0]
    upper = ts[min(i + 1, len(ts) - 1)]
    if upper > lower:
        res = optimize.minimize_scalar(
            lambda t: -abs(defect_at(f, alpha, t)),
            bounds=(lower, upper),
            method="bounded",
        )
        if -res.fun > delta:
            t_star, delta = float(res.x), float(-res.fun)

    threshold = 10 * max(cfg.abs_tol, cfg.rel_tol * f.sup_norm() * T)
    if not delta > threshold or not math.isfinite(delta):
        raise CertificateNotFound(
            f"the period defect stays below {threshold:.3g}"
        )
    return NonperiodicityCertificate(t_star, delta)
