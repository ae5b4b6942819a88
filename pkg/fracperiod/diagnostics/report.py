from __future__ import annotations

import json
import math
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

import attr
import numpy as np
import pandas as pd

from fracperiod.signals import FourierSignal
from fracperiod.typings import Samples

CSV_COLUMNS = ["t", "I_alpha_f", "phi", "remainder", "defect", "bound"]


class Boundedness(Enum):
    """Long-time behavior of a fractional integral of a periodic signal."""

    BOUNDED = "Bounded"
    DIVERGES_PLUS = "DivergesPlus"
    DIVERGES_MINUS = "DivergesMinus"


@attr.s(frozen=True, slots=True)
class BoundednessVerdict:
    """Boundedness of I^alpha f, decided by the mean of f.

    Attributes:
        kind: The verdict.
        mean: The mean of the signal.
        witness_bound: The largest |I^alpha f| on the probe grid, for a
            bounded verdict.
            Defaults to None.

    """

    kind = attr.ib(type=Boundedness)
    mean = attr.ib(type=float)
    witness_bound = attr.ib(default=None, type=Optional[float])

    @property
    def is_bounded(self) -> bool:
        """Gets True if the verdict is Bounded, False otherwise."""
        return self.kind == Boundedness.BOUNDED


@attr.s(frozen=True)
class DefectCurve:
    """Samples of the period defect I^alpha f(t + T) - I^alpha f(t) and of
    its analytic bound T sup|f| t^(alpha - 1) / Gamma(alpha).

    Attributes:
        alpha: The order.
        bound_samples: The (t, bound) samples.
        period: The period T.
        samples: The (t, defect) samples.

    """

    alpha = attr.ib(type=float)
    period = attr.ib(type=float)
    samples = attr.ib(type=Samples)
    bound_samples = attr.ib(type=Samples)

    def max_defect(self) -> float:
        """Returns the largest |defect| over the samples, 0 if empty."""
        return max((abs(d) for _, d in self.samples), default=0.0)

    def violations(self, tol: float = 1e-8) -> List[float]:
        """Returns the times where |defect| exceeds the bound plus tol."""
        return [
            t
            for (t, d), (_, b) in zip(self.samples, self.bound_samples)
            if abs(d) > b + tol
        ]


@attr.s(frozen=True)
class Decomposition:
    """Split of I^alpha f into its periodic part, the Weyl integral, and a
    decaying remainder.

    Attributes:
        fitted_decay: The (C, p) of the model |r(t)| ~ C t^p, None if the
            remainder vanishes.
        periodic_part: The periodic part, as a signal.
        remainder_samples: The (t, r(t)) samples, on increasing times.

    """

    periodic_part = attr.ib(type=FourierSignal)
    remainder_samples = attr.ib(type=Samples)
    fitted_decay = attr.ib(type=Optional[Tuple[float, float]])

    def phi(self, t: float) -> float:
        """Evaluates the periodic part."""
        return self.periodic_part.eval(t)


@attr.s(frozen=True, slots=True)
class NonperiodicityCertificate:
    """Time t* where I^alpha f(t* + T) - I^alpha f(t*) = delta is far from
    zero, which rules out a T-periodic I^alpha f.

    Attributes:
        delta: The defect at t*.
        t_star: The time.

    """

    t_star = attr.ib(type=float)
    delta = attr.ib(type=float)


@attr.s(frozen=True, slots=True)
class GrowthFit:
    """Power law I^alpha f(t) ~ constant * t^exponent of a divergent
    fractional integral.

    Attributes:
        constant: The fitted constant, of the sign of the mean.
        exponent: The fitted exponent.

    """

    exponent = attr.ib(type=float)
    constant = attr.ib(type=float)


def _check_parts(self, attribute: attr.Attribute, growth) -> None:
    if self.verdict.is_bounded != (self.decomposition is not None):
        raise ValueError("a decomposition goes with a bounded verdict only")
    if self.verdict.is_bounded == (growth is not None):
        raise ValueError("a growth fit goes with a divergent verdict only")


def _finite(value: Any) -> Any:
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, (list, tuple)):
        return [_finite(v) for v in value]
    if isinstance(value, dict):
        return {k: _finite(v) for k, v in value.items()}
    return value


@attr.s
class DiagnosticsReport:
    """Diagnostics of a fractional operator applied to a periodic signal.

    Attributes:
        alpha: The order of the analyzed integral.
        config: The quadrature configuration, as a dictionary.
        correction_samples: The (t, f(0) t^(-alpha) / Gamma(1 - alpha))
            samples of a Riemann-Liouville derivative.
            Defaults to None.
        decomposition: The periodic/decaying split, for a bounded verdict.
            Defaults to None.
        defect: The period defect curve.
        growth: The growth fit, for a divergent verdict.
            Defaults to None.
        nonperiodicity: The non-periodicity certificate, None for the zero
            signal.
            Defaults to None.
        operator: The label of the operator.
        signal: The signal spec, as a dictionary.
        values: The (t, I^alpha f(t)) samples.
        verdict: The boundedness verdict.

    """

    signal = attr.ib(type=Dict[str, Any])
    alpha = attr.ib(type=float)
    operator = attr.ib(type=str)
    verdict = attr.ib(type=BoundednessVerdict)
    defect = attr.ib(type=DefectCurve)
    values = attr.ib(type=Samples)
    config = attr.ib(type=Dict[str, Any])
    decomposition = attr.ib(default=None, type=Optional[Decomposition])
    nonperiodicity = attr.ib(
        default=None, type=Optional[NonperiodicityCertificate]
    )
    correction_samples = attr.ib(default=None, type=Optional[Samples])
    growth = attr.ib(
        default=None, type=Optional[GrowthFit], validator=_check_parts
    )

    def summary(self) -> str:
        """Returns the one-line summary of the report."""
        if self.verdict.is_bounded:
            period = _format_period(self.defect.period)
            line = f"Bounded; asymptotically {period}-periodic"
            decay = self.decomposition.fitted_decay  # type: ignore
            if decay is None:
                line += "; remainder ≡ 0"
            else:
                line += f"; remainder decay exponent ≈ {decay[1]:.2f}"
        else:
            plus = self.verdict.kind == Boundedness.DIVERGES_PLUS
            sign = "+" if plus else "-"
            line = f"Diverges ({sign}); growth exponent ≈ "
            line += f"{self.growth.exponent:.2f}"  # type: ignore
        return line + f"; max defect {self.defect.max_defect():.3g}"

    def to_dict(self) -> Dict[str, Any]:
        """Returns the report as a dictionary with a fixed key order."""
        decomposition = None
        if self.decomposition is not None:
            harmonics = self.decomposition.periodic_part.harmonics
            decomposition = {
                "periodic_part": [
                    {"k": k, "re": c.real, "im": c.imag}
                    for k, c in harmonics.items()
                ],
                "remainder_samples": self.decomposition.remainder_samples,
                "fitted_decay": self.decomposition.fitted_decay,
            }
        res = {
            "signal": self.signal,
            "alpha": self.alpha,
            "operator": self.operator,
            "verdict": {
                "kind": self.verdict.kind.value,
                "mean": self.verdict.mean,
                "witness_bound": self.verdict.witness_bound,
            },
            "defect": {
                "alpha": self.defect.alpha,
                "period": self.defect.period,
                "samples": self.defect.samples,
                "bound_samples": self.defect.bound_samples,
            },
            "decomposition": decomposition,
            "nonperiodicity": None
            if self.nonperiodicity is None
            else attr.asdict(self.nonperiodicity),
            "growth": None
            if self.growth is None
            else attr.asdict(self.growth),
            "values": self.values,
            "correction_samples": self.correction_samples,
            "config": self.config,
        }
        return _finite(res)

    def to_json(self) -> str:
        """Returns the report as JSON text."""
        return json.dumps(self.to_dict(), indent=2, allow_nan=False)

    def to_frame(self) -> pd.DataFrame:
        """Returns one row per time, with the columns t, I_alpha_f, phi,
        remainder, defect and bound.

        """
        ts = [t for t, _ in self.values]
        frame = pd.DataFrame(
            {"t": ts, "I_alpha_f": [v for _, v in self.values]}
        )
        frame["phi"] = np.nan
        frame["remainder"] = np.nan
        if self.decomposition is not None:
            remainder = dict(self.decomposition.remainder_samples)
            frame["phi"] = self.decomposition.periodic_part.eval(
                np.asarray(ts, dtype=float)
            )
            frame["remainder"] = [remainder.get(t, np.nan) for t in ts]
        defect = dict(self.defect.samples)
        bound = dict(self.defect.bound_samples)
        frame["defect"] = [defect.get(t, np.nan) for t in ts]
        frame["bound"] = [bound.get(t, np.nan) for t in ts]
        return frame[CSV_COLUMNS]

    def save(self, filename: str, fmt: str = "json") -> None:
        """Saves the report.

        Args:
            filename: The file name.
            fmt: The format, json or csv.
                Defaults to json.

        Raises:
            ValueError: If the format is unknown.

        """
        if fmt == "json":
            with open(filename, "w", encoding="utf8") as f:
                f.write(self.to_json() + "\n")
        elif fmt == "csv":
            write_csv(self.to_frame(), filename)
        else:
            raise ValueError(f"'format' must be csv or json (got {fmt})")


def write_csv(frame: pd.DataFrame, filename: Optional[str] = None) -> str:
    """Writes a frame as CSV with 17 significant digits.

    Args:
        frame: The frame.
        filename: The file name, None to only return the text.
            Defaults to None.

    Returns:
        The CSV text.

    """
    text = frame.to_csv(
        index=False, float_format="%.17g", na_rep="nan", lineterminator="\n"
    )
    if filename is not None:
        with open(filename, "w", encoding="utf8") as f:
            f.write(text)
    return text


def _format_period(period: float) -> str:
    ratio = period / (2 * math.pi)
    if math.isclose(ratio, 1.0, rel_tol=1e-12):
        return "2π"
    if math.isclose(ratio, round(ratio), rel_tol=1e-12) and ratio >= 1:
        return f"{int(round(ratio))}·2π"
    return f"{period:g}"
