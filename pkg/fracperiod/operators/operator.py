import multiprocessing
import operator
import os
import time
from abc import ABC, abstractmethod
from enum import Enum
from typing import ClassVar, Optional

import attr
import numpy as np
from cachetools import Cache, LRUCache, cachedmethod
from cachetools.keys import hashkey
from tqdm import tqdm

from fracperiod.quadrature import FracOrder, QuadratureConfig
from fracperiod.signals import FourierSignal
from fracperiod.typings import Grid
from fracperiod.utils.validation import _check_jobs

THREADS_VARIABLE = "FRACPERIOD_THREADS"


class OperatorKind(Enum):
    """Fractional operators with the upper end of their range of orders."""

    RL_INTEGRAL = ("rl-integral", 2.0)
    CAPUTO_DERIVATIVE = ("caputo", 1.0)
    RL_DERIVATIVE = ("rl-derivative", 1.0)
    WEYL_INTEGRAL = ("weyl", 1.0)

    def __init__(self, label: str, upper: float) -> None:
        self.label = label
        self.upper = upper

    @classmethod
    def from_label(cls, label: str) -> "OperatorKind":
        """Returns the kind of a command-line label such as rl-integral.

        Raises:
            ValueError: If the label is unknown.

        """
        for kind in cls:
            if kind.label == label:
                return kind
        raise ValueError(
            f"'op' must be one of {', '.join(k.label for k in cls)} "
            + f"(got {label})"
        )

    def order(self, alpha: float) -> FracOrder:
        """Returns the order alpha validated against the range of the kind.

        Raises:
            ValueError: If the order is outside the range.

        """
        return FracOrder(alpha, self.upper)


def _check_alpha(self, attribute: attr.Attribute, alpha: float) -> None:
    self.kind.order(alpha)


def max_processes(n_jobs: Optional[int]) -> int:
    """Returns the number of worker processes for a number of jobs, capped by
    the FRACPERIOD_THREADS environment variable.

    Args:
        n_jobs: The number of jobs, None for one and -1 for every CPU.

    Returns:
        The number of processes, >= 1.

    """
    process = 1 if n_jobs is None else n_jobs
    if process == -1:
        process = multiprocessing.cpu_count()
    cap = os.environ.get(THREADS_VARIABLE)
    if cap is not None and cap.strip().isdigit() and int(cap) >= 1:
        process = min(process, int(cap))
    return max(1, process)


@attr.s
class Operator(ABC):
    """Base class of the fractional operators.

    Attributes:
        alpha: The order.
        cache: The policy and size cache to use for the point values.
            Defaults to LRUCache(maxsize=4096).
        config: The quadrature configuration.
            Defaults to QuadratureConfig().
        n_jobs: The number of processes to use for a grid, -1 for every CPU.
            Defaults to None.
        verbose: The verbosity level.
            0: does not display anything;
            1: display of the progress of grid evaluations;
            2: debugging.
            Defaults to 0.

    """

    kind: ClassVar[OperatorKind]

    alpha = attr.ib(type=float, converter=float, validator=_check_alpha)

    config = attr.ib(
        kw_only=True,
        factory=QuadratureConfig,
        type=QuadratureConfig,
        validator=attr.validators.instance_of(QuadratureConfig),
    )

    n_jobs = attr.ib(  # type: ignore
        kw_only=True,
        default=None,
        type=Optional[int],
        validator=[
            attr.validators.optional(attr.validators.instance_of(int)),
            _check_jobs,
        ],
    )

    verbose = attr.ib(
        kw_only=True,
        default=0,
        type=int,
        validator=attr.validators.in_([0, 1, 2]),
    )

    cache = attr.ib(
        kw_only=True,
        type=Cache,
        factory=lambda: LRUCache(maxsize=4096),
        validator=attr.validators.optional(attr.validators.instance_of(Cache)),
        repr=False,
    )

    @property
    def order(self) -> FracOrder:
        """Gets the validated order."""
        return self.kind.order(self.alpha)

    @cachedmethod(
        operator.attrgetter("cache"),
        key=lambda self, *args, **kwargs: hashkey("evaluate", *args, **kwargs),
    )
    def evaluate(self, f: FourierSignal, t: float) -> float:
        """Evaluates the operator applied to a signal at one time.

        Args:
            f: The signal.
            t: The time.

        Returns:
            The value of the operator.

        """
        return self._evaluate(f, float(t))

    def evaluate_grid(self, f: FourierSignal, ts: Grid) -> np.ndarray:
        """Evaluates the operator applied to a signal on a grid of times,
        in parallel when more than one process is requested.

        Args:
            f: The signal.
            ts: The times.

        Returns:
            The values, in the order of the times.

        """
        ts = np.asarray(ts, dtype=float)
        process = max_processes(self.n_jobs)

        tic = time.perf_counter()
        if process == 1 or len(ts) < 2:
            values = [
                self.evaluate(f, t)
                for t in tqdm(
                    ts, disable=True if self.verbose == 0 else False
                )
            ]
        else:
            with multiprocessing.Pool(
                process, self._init_worker, [f]
            ) as pool:
                values = list(
                    tqdm(
                        pool.imap(self._proc, ts),
                        total=len(ts),
                        disable=True if self.verbose == 0 else False,
                    )
                )
        toc = time.perf_counter()

        if self.verbose >= 1:
            print(
                f"Evaluated {self.kind.label} on {len(ts)} points "
                + f"({toc - tic:0.4f}s)"
            )
        return np.asarray(values, dtype=float)

    @abstractmethod
    def _evaluate(self, f: FourierSignal, t: float) -> float:
        """Evaluates the operator applied to a signal at one time.

        Args:
            f: The signal.
            t: The time.

        Returns:
            The value of the operator.

        Raises:
            NotImplementedError: If this method is called, without having
                provided an implementation.

        """
        raise NotImplementedError("This must be implemented!")

    def _init_worker(self, init_signal: FourierSignal) -> None:
        """Initializes each worker process.

        Args:
            init_signal: The signal to provide to each worker process.

        """
        global worker_signal
        worker_signal = init_signal  # type: ignore

    def _proc(self, t: float) -> float:
        """Executes the evaluation of one time within a worker process.

        Args:
            t: The time.

        Returns:
            The value of the operator.

        """
        return self.evaluate(worker_signal, t)  # type: ignore  # noqa: F821
