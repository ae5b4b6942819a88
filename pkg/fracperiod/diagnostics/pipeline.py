import time
from typing import Any, Dict, Optional, Union

import numpy as np

from fracperiod.diagnostics.boundedness import (
    classify_boundedness,
    growth_fit,
    probe_grid,
)
from fracperiod.diagnostics.decomposition import (
    decompose_asymptotic,
    fit_decay,
)
from fracperiod.diagnostics.defect import (
    nonperiodicity_certificate,
    sap_defect,
)
from fracperiod.diagnostics.report import Decomposition, DiagnosticsReport
from fracperiod.operators import OperatorKind, RLDerivative, RLIntegral
from fracperiod.operators.derivative import SINGULAR_TIME
from fracperiod.quadrature import FracOrder, QuadratureConfig
from fracperiod.signals import FourierSignal
from fracperiod.typings import Grid


def _times(f: FourierSignal, t_grid: Optional[Grid]) -> np.ndarray:
    if t_grid is None:
        return probe_grid(f.period)
    ts = np.unique(np.asarray(t_grid, dtype=float))
    if len(ts) == 0 or np.any(ts < 0) or not np.all(np.isfinite(ts)):
        raise ValueError("the diagnostics need finite times >= 0")
    return ts


def _pipeline(
    g: FourierSignal,
    beta: float,
    ts: np.ndarray,
    cfg: QuadratureConfig,
    n_jobs: Optional[int],
    verbose: int,
) -> Dict[str, Any]:
    integral = RLIntegral(beta, config=cfg, n_jobs=n_jobs, verbose=verbose)
    verdict = classify_boundedness(
        g, beta, cfg, grid=ts, integral=integral, verbose=verbose
    )
    parts: Dict[str, Any] = {
        "verdict": verdict,
        "values": list(
            zip(ts.tolist(), integral.evaluate_grid(g, ts).tolist())
        ),
        "defect": sap_defect(g, beta, ts[ts > 0]),
    }
    if verdict.is_bounded:
        parts["decomposition"] = decompose_asymptotic(
            g, beta, ts, cfg, integral=integral
        )
    else:
        parts["growth"] = growth_fit(g, beta, ts, cfg, integral=integral)
    if not g.is_zero():
        parts["nonperiodicity"] = nonperiodicity_certificate(g, beta, cfg)
    return parts


def diagnose(
    f: FourierSignal,
    alpha: float,
    t_grid: Optional[Grid] = None,
    cfg: QuadratureConfig = QuadratureConfig(),
    signal: Optional[Dict[str, Any]] = None,
    n_jobs: Optional[int] = None,
    verbose: int = 0,
) -> DiagnosticsReport:
    """Runs every diagnostic of the Riemann-Liouville integral of a signal:
    boundedness, period defect, then either the periodic/decaying split or
    the growth fit, and the non-periodicity certificate.

    Args:
        f: The signal.
        alpha: The order, in (0, 1).
        t_grid: The times, >= 0.
            Defaults to probe_grid(f.period).
        cfg: The quadrature configuration.
            Defaults to QuadratureConfig().
        signal: The spec of the signal, echoed in the report.
            Defaults to the amplitudes of the signal.
        n_jobs: The number of processes of the grid evaluations.
            Defaults to None.
        verbose: The verbosity level.
            Defaults to 0.

    Returns:
        The report.

    """
    FracOrder(alpha, 1.0)
    tic = time.perf_counter()
    ts = _times(f, t_grid)
    parts = _pipeline(f, alpha, ts, cfg, n_jobs, verbose)
    report = DiagnosticsReport(
        signal=_echo(f) if signal is None else signal,
        alpha=alpha,
        operator=OperatorKind.RL_INTEGRAL.label,
        config=cfg.to_dict(),
        **parts,
    )
    toc = time.perf_counter()
    if verbose >= 1:
        print(f"Diagnosed {len(ts)} points ({toc - tic:0.4f}s)")
    return report


def derivative_diagnostics(
    f: FourierSignal,
    alpha: float,
    kind: Union[OperatorKind, str],
    t_grid: Optional[Grid] = None,
    cfg: QuadratureConfig = QuadratureConfig(),
    signal: Optional[Dict[str, Any]] = None,
    n_jobs: Optional[int] = None,
    verbose: int = 0,
) -> DiagnosticsReport:
    """Runs the diagnostics of a fractional derivative of order alpha.

    A Caputo derivative is the integral of order 1 - alpha of f', whose
    mean is zero, so it is always bounded. A Riemann-Liouville derivative
    adds f(0) t^(-alpha) / Gamma(1 - alpha), reported in the values, in the
    remainder and on its own; its times start at 1e-12.

    Args:
        f: The signal.
        alpha: The order of the derivative, in (0, 1).
        kind: The derivative, caputo or rl-derivative.
        t_grid: The times, >= 0.
            Defaults to probe_grid(f.period).
        cfg: The quadrature configuration.
            Defaults to QuadratureConfig().
        signal: The spec of the signal, echoed in the report.
            Defaults to the amplitudes of the signal.
        n_jobs: The number of processes of the grid evaluations.
            Defaults to None.
        verbose: The verbosity level.
            Defaults to 0.

    Returns:
        The report, whose defect curve is the one of the integral of f'.

    Raises:
        ValueError: If the kind is not a derivative.

    """
    if isinstance(kind, str):
        kind = OperatorKind.from_label(kind)
    if kind not in (
        OperatorKind.CAPUTO_DERIVATIVE,
        OperatorKind.RL_DERIVATIVE,
    ):
        raise ValueError(
            f"'kind' must be caputo or rl-derivative (got {kind.label})"
        )
    kind.order(alpha)
    ts = _times(f, t_grid)
    if kind == OperatorKind.RL_DERIVATIVE:
        ts = ts[ts >= SINGULAR_TIME]
        if len(ts) == 0:
            raise ValueError(
                f"the diagnostics need times >= {SINGULAR_TIME:g}"
            )
    parts = _pipeline(f.differentiate(), 1 - alpha, ts, cfg, n_jobs, verbose)

    if kind == OperatorKind.RL_DERIVATIVE:
        operator = RLDerivative(alpha, config=cfg)
        correction = np.asarray([operator.correction(f, t) for t in ts])
        parts["correction_samples"] = list(
            zip(ts.tolist(), correction.tolist())
        )
        parts["values"] = [
            (t, v + c) for (t, v), c in zip(parts["values"], correction)
        ]
        split = parts["decomposition"]
        remainder = np.asarray([r for _, r in split.remainder_samples])
        remainder = remainder + correction
        parts["decomposition"] = Decomposition(
            split.periodic_part,
            list(zip(ts.tolist(), remainder.tolist())),
            fit_decay(ts, remainder, floor=10 * cfg.abs_tol),
        )

    return DiagnosticsReport(
        signal=_echo(f) if signal is None else signal,
        alpha=alpha,
        operator=kind.label,
        config=cfg.to_dict(),
        **parts,
    )


def _echo(f: FourierSignal) -> Dict[str, Any]:
    return {
        "period": f.period,
        "harmonics": [
            {"k": k, "re": c.real, "im": c.imag}
            for k, c in f.harmonics.items()
        ],
    }
