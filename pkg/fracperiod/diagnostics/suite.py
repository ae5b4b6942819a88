"""Verification suite of the fractional operators: each check runs a known
identity on the builtin signals and reports the largest error."""
import itertools
import math
import time
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from fracperiod.diagnostics.decomposition import decompose_asymptotic
from fracperiod.diagnostics.defect import defect_at, sap_defect
from fracperiod.operators import (
    RLDerivative,
    RLIntegral,
    weyl_integral_fourier,
    weyl_integral_kernel,
    weyl_integral_limit,
)
from fracperiod.quadrature import (
    QuadratureConfig,
    oracle_singular_integral,
    singular_integral,
    singular_integral_of,
)
from fracperiod.signals import FourierSignal
from fracperiod.special import gamma, i_alpha_cos_closed, i_alpha_sin_closed

TABLE_COLUMNS = ["check", "passed", "detail"]

ORDERS = (0.25, 0.5, 0.75)

Outcome = Tuple[bool, str]


def _signals() -> Dict[str, FourierSignal]:
    return {
        "sin": FourierSignal.builtin("sin"),
        "cos": FourierSignal.builtin("cos"),
        "square": FourierSignal.builtin("square-wave-truncated", harmonics=3),
    }


def _outcome(errors: List[float], tol: float) -> Outcome:
    worst = max(errors, default=0.0)
    return (
        worst <= tol,
        f"max error {worst:.3g} over {len(errors)} cases (tol {tol:.3g})",
    )


def _lemma_bound(cfg: QuadratureConfig) -> Outcome:
    ts = np.geomspace(0.5, 100, 12)
    excess = []
    for f, alpha in itertools.product(_signals().values(), ORDERS):
        curve = sap_defect(f, alpha, ts)
        excess.extend(
            max(0.0, abs(d) - b)
            for (_, d), (_, b) in zip(curve.samples, curve.bound_samples)
        )
    return _outcome(excess, 1e-8)


def _defect_identity(cfg: QuadratureConfig) -> Outcome:
    errors = []
    for f, alpha, t in itertools.product(
        _signals().values(), ORDERS, (0.7, 4.0, 25.0)
    ):
        integral = RLIntegral(alpha, config=cfg)
        a = integral.evaluate(f, t + f.period)
        b = integral.evaluate(f, t)
        errors.append(abs(defect_at(f, alpha, t) - (a - b)))
    return _outcome(errors, 100 * max(cfg.abs_tol, cfg.rel_tol))


def _route_agreement(cfg: QuadratureConfig) -> Outcome:
    errors = []
    for f, alpha, t in itertools.product(
        _signals().values(), ORDERS, (0.3, 2.0, 5.0)
    ):
        exact = weyl_integral_fourier(f, alpha, t)
        errors.append(abs(weyl_integral_kernel(f, alpha, t) - exact))
        errors.append(
            abs(weyl_integral_limit(f, alpha, t, cfg=cfg) - exact)
        )
    return _outcome(errors, 1e-6)


def _semigroup(cfg: QuadratureConfig) -> Outcome:
    f = FourierSignal.builtin("sin")
    errors = []
    for (a, b), t in itertools.product(
        [(0.5, 0.5), (0.25, 0.5), (0.75, 0.5)], (1.0, 3.0)
    ):
        inner = RLIntegral(b, config=cfg)
        composed = singular_integral_of(
            lambda s: inner.evaluate(f, s), a, t, cfg
        )
        direct = RLIntegral(a + b, config=cfg).evaluate(f, t)
        errors.append(abs(composed - direct))
    return _outcome(errors, 1e-7)


def _rl_caputo(cfg: QuadratureConfig) -> Outcome:
    f = FourierSignal.builtin("sin", offset=1.0)
    one = FourierSignal.builtin("const")
    h = 1e-3
    errors = []
    for alpha, t in itertools.product(ORDERS, (0.5, 2.0, 7.0)):
        derivative = RLDerivative(alpha, config=cfg)
        integral = RLIntegral(1 - alpha, config=cfg)
        slope = (
            integral.evaluate(f, t + h) - integral.evaluate(f, t - h)
        ) / (2 * h)
        errors.append(abs(derivative.evaluate(f, t) - slope))
        exact = t**-alpha / gamma(1 - alpha)
        errors.append(abs(derivative.evaluate(one, t) - exact))
    return _outcome(errors, 1e-5)


def _scheme_agreement(cfg: QuadratureConfig) -> Outcome:
    errors = []
    for f, alpha, t in itertools.product(
        _signals().values(), ORDERS, (1.0, 10.0, 50.0)
    ):
        product = singular_integral(f, alpha, t, cfg)
        oracle = oracle_singular_integral(f, alpha, t, cfg)
        errors.append(abs(product - oracle) / max(1.0, abs(oracle)))
    return _outcome(errors, 1e-8)


def _closed_form(cfg: QuadratureConfig) -> Outcome:
    sin = FourierSignal.builtin("sin")
    cos = FourierSignal.builtin("cos")
    errors = []
    for alpha, t in itertools.product(ORDERS + (1.5,), (0.5, 5.0, 30.0)):
        integral = RLIntegral(alpha, config=cfg)
        errors.append(
            abs(integral.evaluate(sin, t) - i_alpha_sin_closed(alpha, t))
        )
        errors.append(
            abs(integral.evaluate(cos, t) - i_alpha_cos_closed(alpha, t))
        )
    for alpha in ORDERS:
        shifted = math.sin(1.0 - 0.5 * math.pi * alpha)
        errors.append(abs(weyl_integral_fourier(sin, alpha, 1.0) - shifted))
    return _outcome(errors, 1e-8)


def _remainder_exclusion(cfg: QuadratureConfig) -> Outcome:
    worst_size, worst_decay = math.inf, -math.inf
    for f, alpha in itertools.product(
        [FourierSignal.builtin("sin"), FourierSignal.builtin("cos")], ORDERS
    ):
        T = f.period
        ts = np.concatenate(
            [np.linspace(0, 3 * T, 33)[1:], np.geomspace(3 * T, 40 * T, 49)]
        )
        split = decompose_asymptotic(f, alpha, ts, cfg)
        size = max(abs(r) for t, r in split.remainder_samples if t <= 3 * T)
        worst_size = min(worst_size, size)
        if split.fitted_decay is None:
            worst_decay = math.inf
        else:
            worst_decay = max(worst_decay, split.fitted_decay[1])
    threshold = 10 * max(cfg.abs_tol, cfg.rel_tol)
    return (
        worst_size > threshold and worst_decay < 0,
        f"min max|r| on (0, 3T] {worst_size:.3g} (threshold "
        + f"{threshold:.3g}), max decay exponent {worst_decay:.3g}",
    )


CHECKS: Dict[str, Callable[[QuadratureConfig], Outcome]] = {
    "lemma-bound": _lemma_bound,
    "defect-identity": _defect_identity,
    "route-agreement": _route_agreement,
    "semigroup": _semigroup,
    "rl-caputo": _rl_caputo,
    "scheme-agreement": _scheme_agreement,
    "closed-form": _closed_form,
    "remainder-exclusion": _remainder_exclusion,
}


def run_checks(
    names: Optional[Sequence[str]] = None,
    cfg: QuadratureConfig = QuadratureConfig(),
    verbose: int = 0,
) -> pd.DataFrame:
    """Runs verification checks.

    An exception raised by a check, such as a quadrature that does not meet
    its tolerance, fails that check only.

    Args:
        names: The checks to run, in order.
            Defaults to every check.
        cfg: The quadrature configuration.
            Defaults to QuadratureConfig().
        verbose: The verbosity level.
            Defaults to 0.

    Returns:
        One row per check, with the columns check, passed and detail.

    Raises:
        ValueError: If a check is unknown.

    """
    names = list(CHECKS) if names is None else list(names)
    unknown = [name for name in names if name not in CHECKS]
    if unknown:
        raise ValueError(
            f"unknown checks {', '.join(unknown)} "
            + f"(expected some of {', '.join(CHECKS)})"
        )
    rows = []
    for name in names:
        tic = time.perf_counter()
        try:
            passed, detail = CHECKS[name](cfg)
        except Exception as err:
            passed, detail = False, f"{type(err).__name__}: {err}"
        toc = time.perf_counter()
        if verbose >= 1:
            print(f"Checked {name} ({toc - tic:0.4f}s)")
        rows.append({"check": name, "passed": bool(passed), "detail": detail})
    return pd.DataFrame(rows, columns=TABLE_COLUMNS)
