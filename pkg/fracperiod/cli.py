import json
import sys
from contextlib import redirect_stdout
from pathlib import Path
from typing import Callable, Optional, Tuple

import attr
import numpy as np
import pandas as pd
import typer
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from fracperiod import __version__
from fracperiod.diagnostics import (
    CertificateNotFound,
    derivative_diagnostics,
    diagnose,
    run_checks,
    write_csv,
)
from fracperiod.operators import (
    CaputoDerivative,
    Operator,
    OperatorKind,
    RLDerivative,
    RLIntegral,
    SingularAtZero,
    WeylIntegral,
)
from fracperiod.operators.weyl import ROUTES
from fracperiod.quadrature import (
    DepthImpractical,
    NonPositiveTime,
    QuadratureConfig,
    ToleranceNotMet,
)
from fracperiod.signals import (
    NonConjugateSymmetric,
    NonZeroMean,
    SignalSpec,
    ZeroMean,
)
from fracperiod.special import (
    PoleAtNonPositiveInteger,
    SeriesIllConditioned,
    UnsupportedOrder,
)
from fracperiod.utils.validation import _check_points, _check_t_max

FORMATS = ("csv", "json")

EXIT_FAILED_CHECK = 1
EXIT_INVALID = 2
EXIT_TOLERANCE = 3
EXIT_DEPTH = 4

INVALID_INPUT = (
    ValueError,
    OSError,
    NonConjugateSymmetric,
    NonPositiveTime,
    NonZeroMean,
    PoleAtNonPositiveInteger,
    SeriesIllConditioned,
    SingularAtZero,
    UnsupportedOrder,
    ZeroMean,
)

app = typer.Typer(
    name="fracperiod",
    help="Fractional integrals and derivatives of periodic signals.",
    add_completion=False,
    no_args_is_help=True,
)
console = Console(stderr=True)


def parse_grid(text: str) -> Tuple[float, float, int]:
    """Parses a time grid written t_min:t_max:points.

    Raises:
        ValueError: If the text is not of this form.

    """
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"'t' must read t_min:t_max:points (got {text})")
    try:
        return float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise ValueError(
            f"'t' must read t_min:t_max:points (got {text})"
        ) from None


def _check_alpha(self, attribute: attr.Attribute, alpha: float) -> None:
    OperatorKind.from_label(self.op).order(alpha)


def _check_log(self, attribute: attr.Attribute, log: bool) -> None:
    if log and not self.t_min > 0:
        raise ValueError(
            f"'t_min' must be > 0 for a log grid (got {self.t_min})"
        )


def _check_format(self, attribute: attr.Attribute, fmt: str) -> None:
    if fmt not in FORMATS:
        raise ValueError(f"'format' must be csv or json (got {fmt})")


@attr.s
class RunConfig:
    """Options of an eval or diagnose run.

    Attributes:
        alpha: The order, in the range of the operator.
        cfg: The quadrature configuration.
            Defaults to QuadratureConfig().
        fmt: The output format, csv or json.
            Defaults to csv.
        log: True to space the times logarithmically, False otherwise.
            Defaults to False.
        n_jobs: The number of processes of the grid evaluations.
            Defaults to None.
        op: The label of the operator.
            Defaults to rl-integral.
        out: The output file, None for the standard output.
            Defaults to None.
        points: The number of times.
            Defaults to 200.
        route: The route of the Weyl integral.
            Defaults to fourier.
        signal: The signal spec.
        t_max: The last time.
            Defaults to 50.0.
        t_min: The first time.
            Defaults to 0.0.
        verbose: The verbosity level.
            Defaults to 0.

    """

    signal = attr.ib(
        type=SignalSpec, validator=attr.validators.instance_of(SignalSpec)
    )
    op = attr.ib(kw_only=True, default="rl-integral", type=str)
    alpha = attr.ib(
        kw_only=True, default=0.5, type=float, validator=_check_alpha
    )
    route = attr.ib(
        kw_only=True,
        default="fourier",
        type=str,
        validator=attr.validators.in_(ROUTES),
    )
    t_min = attr.ib(kw_only=True, default=0.0, type=float)
    t_max = attr.ib(
        kw_only=True, default=50.0, type=float, validator=_check_t_max
    )
    points = attr.ib(
        kw_only=True, default=200, type=int, validator=_check_points
    )
    log = attr.ib(kw_only=True, default=False, type=bool, validator=_check_log)
    out = attr.ib(kw_only=True, default=None, type=Optional[Path])
    fmt = attr.ib(
        kw_only=True, default="csv", type=str, validator=_check_format
    )
    cfg = attr.ib(kw_only=True, factory=QuadratureConfig)
    n_jobs = attr.ib(kw_only=True, default=None, type=Optional[int])
    verbose = attr.ib(
        kw_only=True,
        default=0,
        type=int,
        validator=attr.validators.in_([0, 1, 2]),
    )

    @property
    def kind(self) -> OperatorKind:
        """Gets the kind of the operator."""
        return OperatorKind.from_label(self.op)

    def grid(self) -> np.ndarray:
        """Returns the times, increasing."""
        if self.log:
            return np.geomspace(self.t_min, self.t_max, self.points)
        return np.linspace(self.t_min, self.t_max, self.points)

    def operator(self) -> Operator:
        """Returns the operator of the run."""
        options = dict(
            config=self.cfg, n_jobs=self.n_jobs, verbose=self.verbose
        )
        kind = self.kind
        if kind == OperatorKind.RL_INTEGRAL:
            return RLIntegral(self.alpha, **options)
        if kind == OperatorKind.CAPUTO_DERIVATIVE:
            return CaputoDerivative(self.alpha, **options)
        if kind == OperatorKind.RL_DERIVATIVE:
            return RLDerivative(self.alpha, **options)
        return WeylIntegral(self.alpha, route=self.route, **options)


def _run(action: Callable[[], Tuple[int, str]]) -> None:
    text = ""
    try:
        with redirect_stdout(sys.stderr):
            code, text = action()
    except (ToleranceNotMet, CertificateNotFound) as err:
        console.print(f"error: {err}", style="red", markup=False)
        code = EXIT_TOLERANCE
    except DepthImpractical as err:
        console.print(f"error: {err}", style="red", markup=False)
        code = EXIT_DEPTH
    except INVALID_INPUT as err:
        console.print(f"error: {err}", style="red", markup=False)
        code = EXIT_INVALID
    if text:
        typer.echo(text, nl=False)
    raise typer.Exit(code=code)


def _emit(text: str, out: Optional[Path]) -> str:
    if out is None:
        return text
    with open(out, "w", encoding="utf8") as f:
        f.write(text)
    return ""


def _signal_spec(
    signal: Optional[Path],
    builtin: Optional[str],
    period: Optional[float],
    amplitude: Optional[float],
    offset: Optional[float],
) -> SignalSpec:
    if (signal is None) == (builtin is None):
        raise ValueError("pass either --signal or --builtin")
    if signal is not None:
        if any(x is not None for x in (period, amplitude, offset)):
            raise ValueError(
                "--period, --amplitude and --offset go with --builtin only"
            )
        return SignalSpec.load(str(signal))
    options = {
        "period": period,
        "amplitude": amplitude,
        "offset": offset,
    }
    return SignalSpec(
        builtin, **{k: v for k, v in options.items() if v is not None}
    )


SIGNAL = typer.Option(None, "--signal", help="JSON or TOML signal spec.")
BUILTIN = typer.Option(
    None,
    "--builtin",
    help="Builtin shape: sin, cos, const or square-wave-truncated.",
)
PERIOD = typer.Option(None, "--period", help="Period of a builtin shape.")
AMPLITUDE = typer.Option(None, "--amplitude", help="Amplitude of a shape.")
OFFSET = typer.Option(None, "--offset", help="Offset of a builtin shape.")
ALPHA = typer.Option(0.5, "--alpha", help="Order of the operator.")
LOG = typer.Option(False, "--log", help="Log-spaced times (t_min > 0).")
OUT = typer.Option(None, "--out", help="Output file.")
REL_TOL = typer.Option(1e-10, "--rel-tol", help="Relative tolerance.")
PANELS = typer.Option(64, "--panels", help="Panels per period (>= 8).")
REFINEMENTS = typer.Option(
    3, "--max-refinements", help="Mesh doublings before failing."
)
VERBOSE = typer.Option(0, "--verbose", help="Verbosity level: 0, 1 or 2.")
JOBS = typer.Option(
    None, "--n-jobs", help="Worker processes, -1 for every CPU."
)


def _run_config(
    signal: Optional[Path],
    builtin: Optional[str],
    period: Optional[float],
    amplitude: Optional[float],
    offset: Optional[float],
    t: Optional[str],
    rel_tol: float,
    panels: int,
    max_refinements: int,
    **options,
) -> RunConfig:
    if t is not None:
        t_min, t_max, points = parse_grid(t)
        options.update(t_min=t_min, t_max=t_max, points=points)
    cfg = QuadratureConfig(
        rel_tol=rel_tol,
        panels_per_period=panels,
        max_refinements=max_refinements,
    )
    return RunConfig(
        _signal_spec(signal, builtin, period, amplitude, offset),
        cfg=cfg,
        **options,
    )


@app.command("eval")
def cmd_eval(
    signal: Optional[Path] = SIGNAL,
    builtin: Optional[str] = BUILTIN,
    period: Optional[float] = PERIOD,
    amplitude: Optional[float] = AMPLITUDE,
    offset: Optional[float] = OFFSET,
    alpha: float = ALPHA,
    op: str = typer.Option(
        "rl-integral",
        "--op",
        help="Operator: rl-integral, caputo, rl-derivative or weyl.",
    ),
    route: str = typer.Option(
        "fourier", "--route", help="Weyl route: fourier, limit or kernel."
    ),
    t: str = typer.Option(
        "0:50:200", "--t", help="Times, written t_min:t_max:points."
    ),
    log: bool = LOG,
    out: Optional[Path] = OUT,
    fmt: str = typer.Option(
        "csv", "--format", help="Output format: csv or json."
    ),
    rel_tol: float = REL_TOL,
    panels: int = PANELS,
    max_refinements: int = REFINEMENTS,
    n_jobs: Optional[int] = JOBS,
    verbose: int = VERBOSE,
) -> None:
    """Evaluates an operator on a time grid and writes the (t, value)
    rows.
    """

    def action() -> Tuple[int, str]:
        config = _run_config(
            signal,
            builtin,
            period,
            amplitude,
            offset,
            t,
            rel_tol,
            panels,
            max_refinements,
            alpha=alpha,
            op=op,
            route=route,
            log=log,
            out=out,
            fmt=fmt,
            n_jobs=n_jobs,
            verbose=verbose,
        )
        ts = config.grid()
        values = config.operator().evaluate_grid(
            config.signal.to_signal(), ts
        )
        if config.fmt == "csv":
            text = write_csv(pd.DataFrame({"t": ts, "value": values}))
        else:
            data = {
                "signal": config.signal.to_dict(),
                "alpha": config.alpha,
                "operator": config.op,
                "samples": [
                    [x, y] for x, y in zip(ts.tolist(), values.tolist())
                ],
            }
            text = json.dumps(data, indent=2, allow_nan=False) + "\n"
        return 0, _emit(text, config.out)

    _run(action)


@app.command("diagnose")
def cmd_diagnose(
    signal: Optional[Path] = SIGNAL,
    builtin: Optional[str] = BUILTIN,
    period: Optional[float] = PERIOD,
    amplitude: Optional[float] = AMPLITUDE,
    offset: Optional[float] = OFFSET,
    alpha: float = ALPHA,
    op: str = typer.Option(
        "rl-integral",
        "--op",
        help="Operator: rl-integral, caputo or rl-derivative.",
    ),
    t: Optional[str] = typer.Option(
        None,
        "--t",
        help="Times, written t_min:t_max:points. "
        + "Defaults to 129 probe times on [0, 40T].",
    ),
    log: bool = LOG,
    out: Optional[Path] = OUT,
    fmt: str = typer.Option(
        "json", "--format", help="Report format: csv or json."
    ),
    rel_tol: float = REL_TOL,
    panels: int = PANELS,
    max_refinements: int = REFINEMENTS,
    n_jobs: Optional[int] = JOBS,
    verbose: int = VERBOSE,
) -> None:
    """Diagnoses the long-time behavior of an operator applied to a
    signal, prints the summary line and saves the report to --out.
    """

    def action() -> Tuple[int, str]:
        config = _run_config(
            signal,
            builtin,
            period,
            amplitude,
            offset,
            t,
            rel_tol,
            panels,
            max_refinements,
            alpha=alpha,
            op=op,
            log=log,
            out=out,
            fmt=fmt,
            n_jobs=n_jobs,
            verbose=verbose,
        )
        f = config.signal.to_signal()
        options = dict(
            t_grid=None if t is None else config.grid(),
            cfg=config.cfg,
            signal=config.signal.to_dict(),
            n_jobs=config.n_jobs,
            verbose=config.verbose,
        )
        if config.kind == OperatorKind.RL_INTEGRAL:
            report = diagnose(f, config.alpha, **options)
        elif config.kind == OperatorKind.WEYL_INTEGRAL:
            raise ValueError(
                "'op' must be rl-integral, caputo or rl-derivative "
                + "(got weyl)"
            )
        else:
            report = derivative_diagnostics(
                f, config.alpha, config.kind, **options
            )
        if config.out is not None:
            report.save(str(config.out), config.fmt)
        return 0, report.summary() + "\n"

    _run(action)


@app.command("verify")
def cmd_verify(
    checks: Optional[str] = typer.Option(
        None,
        "--checks",
        help="Comma separated checks, empty for none. "
        + "Defaults to every check.",
    ),
    out: Optional[Path] = OUT,
    fmt: str = typer.Option(
        "csv", "--format", help="Table format: csv or json."
    ),
    rel_tol: float = REL_TOL,
    panels: int = PANELS,
    max_refinements: int = REFINEMENTS,
    verbose: int = VERBOSE,
) -> None:
    """Runs the verification checks and writes one pass/fail row per
    check; exits with 1 if a check fails.
    """

    def action() -> Tuple[int, str]:
        if fmt not in FORMATS:
            raise ValueError(f"'format' must be csv or json (got {fmt})")
        if verbose not in (0, 1, 2):
            raise ValueError(f"'verbose' must be 0, 1 or 2 (got {verbose})")
        names = None
        if checks is not None:
            names = [n.strip() for n in checks.split(",") if n.strip()]
        cfg = QuadratureConfig(
            rel_tol=rel_tol,
            panels_per_period=panels,
            max_refinements=max_refinements,
        )
        table = run_checks(names, cfg, verbose)
        if fmt == "csv":
            text = write_csv(table)
        else:
            records = table.to_dict(orient="records")
            text = json.dumps(records, indent=2) + "\n"

        summary = Table("check", "passed", "detail", title="verify")
        for row in table.itertuples(index=False):
            summary.add_row(
                row.check, "yes" if row.passed else "no", escape(row.detail)
            )
        console.print(summary)
        passed = bool(table["passed"].all())
        return 0 if passed else EXIT_FAILED_CHECK, _emit(text, out)

    _run(action)


@app.callback(invoke_without_command=True)
def main(
    version: bool = typer.Option(
        False, "--version", help="Shows the version and exits."
    )
) -> None:
    """Fractional integrals and derivatives of periodic signals."""
    if version:
        typer.echo(__version__)
        raise typer.Exit()
