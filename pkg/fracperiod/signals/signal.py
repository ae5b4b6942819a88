from __future__ import annotations

import math
import threading
from typing import Dict, Iterable, Tuple, Union

import attr
import numpy as np
from cachetools import LRUCache, cached
from numpy.polynomial.polynomial import polyval
from scipy import integrate, optimize

from fracperiod.typings import Bracket, Grid, Harmonics
from fracperiod.utils.validation import _check_period

BUILTINS = ("sin", "cos", "const", "square-wave-truncated")


class NonConjugateSymmetric(Exception):
    """Base exception class for a list of Fourier coefficients that does not
    describe a real-valued signal.

    """

    pass


class NonZeroMean(Exception):
    """Base exception class for an operation that needs a signal whose mean
    over one period is zero.

    """

    pass


class ZeroMean(Exception):
    """Base exception class for an operation that needs a signal with a
    non-zero mean.

    """

    pass


def _to_coeffs(values: Iterable[complex]) -> Tuple[complex, ...]:
    return tuple(complex(c) for c in values)


def _check_coeffs(
    self, attribute: attr.Attribute, coeffs: Tuple[complex, ...]
) -> None:
    if len(coeffs) == 0:
        raise ValueError("'coeffs' must hold at least the mean c_0")
    if coeffs[0].imag != 0:
        raise NonConjugateSymmetric(
            f"c_0 must be real for a real signal (got {coeffs[0]})"
        )
    if not all(math.isfinite(abs(c)) for c in coeffs):
        raise ValueError("'coeffs' must be finite")


@attr.s(frozen=True, slots=True)
class FourierSignal:
    """Real T-periodic signal given by a finite Fourier series.

    Only the non-negative harmonics are stored: the coefficient of -k is the
    complex conjugate of the one of k, which keeps the signal real.

    Attributes:
        coeffs: The complex amplitudes c_0, ..., c_K.
        period: The period T.

    """

    period = attr.ib(type=float, converter=float, validator=_check_period)

    coeffs = attr.ib(
        type=Tuple[complex, ...], converter=_to_coeffs, validator=_check_coeffs
    )

    @classmethod
    def from_harmonics(
        cls, period: float, harmonics: Harmonics
    ) -> FourierSignal:
        """Creates a signal from a mapping of both positive and negative
        harmonics to their amplitudes.

        Args:
            period: The period T.
            harmonics: The complex amplitude of each harmonic k. A missing
                harmonic is zero; a present harmonic k != 0 needs its -k
                partner.

        Returns:
            The signal.

        Raises:
            NonConjugateSymmetric: If c_{-k} is not exactly the complex
                conjugate of c_k, or if a harmonic has no partner.

        """
        K = max((abs(k) for k in harmonics), default=0)
        coeffs = [0j] * (K + 1)
        for k, c in harmonics.items():
            c = complex(c)
            if k == 0:
                coeffs[0] = c
                continue
            if -k not in harmonics:
                raise NonConjugateSymmetric(
                    f"harmonic {k} has no matching harmonic {-k}"
                )
            if complex(harmonics[-k]) != c.conjugate():
                raise NonConjugateSymmetric(
                    f"c_{-k} = {complex(harmonics[-k])} is not the "
                    + f"conjugate of c_{k} = {c}"
                )
            if k > 0:
                coeffs[k] = c
        return cls(period, coeffs)

    @classmethod
    def builtin(
        cls,
        name: str,
        period: float = 2 * math.pi,
        amplitude: float = 1.0,
        offset: float = 0.0,
        harmonics: int = 7,
    ) -> FourierSignal:
        """Creates the signal offset + amplitude * shape(t).

        Args:
            name: The shape, one of sin, cos, const and
                square-wave-truncated. The shapes are evaluated at
                2 pi t / period and const is the constant 1.
            period: The period T.
                Defaults to 2 pi.
            amplitude: The amplitude A.
                Defaults to 1.0.
            offset: The offset B, which is also the mean of the signal for
                every shape but const.
                Defaults to 0.0.
            harmonics: The highest harmonic kept by the square wave.
                Defaults to 7.

        Returns:
            The signal.

        Raises:
            ValueError: If the shape is unknown.

        """
        if name == "sin":
            coeffs = [offset, -0.5j * amplitude]
        elif name == "cos":
            coeffs = [offset, 0.5 * amplitude]
        elif name == "const":
            coeffs = [offset + amplitude]
        elif name == "square-wave-truncated":
            if harmonics < 1:
                raise ValueError(
                    f"'harmonics' must be >= 1 (got {harmonics})"
                )
            coeffs = [complex(offset)] + [0j] * harmonics
            for k in range(1, harmonics + 1, 2):
                coeffs[k] = -2j * amplitude / (math.pi * k)
        else:
            raise ValueError(
                f"'builtin' must be one of {', '.join(BUILTINS)} (got {name})"
            )
        return cls(period, coeffs)

    @classmethod
    def zero(cls, period: float = 2 * math.pi) -> FourierSignal:
        """Returns the identically zero signal of a given period."""
        return cls(period, [0.0])

    @property
    def omega(self) -> float:
        """Gets the angular frequency 2 pi / T."""
        return 2 * math.pi / self.period

    @property
    def degree(self) -> int:
        """Gets the highest harmonic with a non-zero amplitude."""
        for k in range(len(self.coeffs) - 1, 0, -1):
            if self.coeffs[k] != 0:
                return k
        return 0

    @property
    def harmonics(self) -> Harmonics:
        """Gets the amplitudes of the harmonics -K, ..., K."""
        res: Dict[int, complex] = {0: self.coeffs[0]}
        for k, c in enumerate(self.coeffs[1:], start=1):
            res[k] = c
            res[-k] = c.conjugate()
        return dict(sorted(res.items()))

    def eval(self, t: Union[float, Grid]) -> Union[float, np.ndarray]:
        """Evaluates the signal.

        Args:
            t: The time(s).

        Returns:
            The real value(s) of the signal, a float for a scalar time.

        """
        x = np.mod(np.asarray(t, dtype=float), self.period)
        res = np.full(x.shape, self.coeffs[0].real)
        if len(self.coeffs) > 1:
            z = np.exp(1j * self.omega * x)
            res = res + 2 * np.real(z * polyval(z, self.coeffs[1:]))
        return float(res) if res.ndim == 0 else res

    def __call__(self, t: Union[float, Grid]) -> Union[float, np.ndarray]:
        return self.eval(t)

    def mean(self) -> float:
        """Returns the mean of the signal over one period, i.e. c_0."""
        return self.coeffs[0].real

    def is_zero(self) -> bool:
        """Returns True if every amplitude is zero, False otherwise."""
        return all(c == 0 for c in self.coeffs)

    def has_zero_mean(self, rtol: float = 1e-12) -> bool:
        """Returns True if |mean| <= rtol * (1 + sup_norm), False otherwise.

        Args:
            rtol: The relative tolerance, which only absorbs the rounding
                of the coefficients.
                Defaults to 1e-12.

        """
        return abs(self.mean()) <= rtol * (1 + self.sup_norm())

    def sup_norm_bracket(self) -> Bracket:
        """Brackets the sup norm of the signal.

        Returns:
            The maximum of |f| on a grid of 8K + 64 points per period and
            the sum of the moduli of all amplitudes.

        """
        grid = np.linspace(0, self.period, _grid_size(self), endpoint=False)
        lower = float(np.max(np.abs(self.eval(grid))))
        upper = abs(self.coeffs[0]) + 2 * sum(abs(c) for c in self.coeffs[1:])
        return lower, upper

    def sup_norm(self) -> float:
        """Returns the sup norm of the signal.

        The grid maximum is refined locally and the result is guaranteed to
        lie in the bracket of sup_norm_bracket.

        """
        return _sup_norm(self)

    def positive_part_mass(self) -> float:
        """Returns the integral of the positive part of a mean-zero signal
        over one period.

        The signal is split at its sign changes, located by bisection on the
        brackets of a dense grid, and every positive piece is integrated
        adaptively.

        Returns:
            The mass of the positive part, which equals the one of the
            negative part.

        Raises:
            NonZeroMean: If the mean of the signal is not zero.

        """
        if self.is_zero():
            return 0.0
        sup = self.sup_norm()
        if abs(self.mean()) > 1e-12 * sup:
            raise NonZeroMean(
                f"the mean must be zero (got {self.mean()}, sup = {sup})"
            )
        grid = np.linspace(0, self.period, _grid_size(self) + 1)
        values = self.eval(grid)
        breaks = [0.0]
        for i in range(len(grid) - 1):
            if values[i] == 0 and i > 0:
                breaks.append(float(grid[i]))
            elif values[i] * values[i + 1] < 0:
                breaks.append(
                    optimize.brentq(
                        self.eval, grid[i], grid[i + 1], xtol=1e-15
                    )
                )
        breaks.append(self.period)

        mass = 0.0
        for a, b in zip(breaks[:-1], breaks[1:]):
            if b > a and self.eval(0.5 * (a + b)) > 0:
                mass += integrate.quad(
                    self.eval, a, b, epsabs=1e-14, epsrel=1e-12
                )[0]
        return mass

    def differentiate(self) -> FourierSignal:
        """Returns the derivative of the signal, exactly."""
        return FourierSignal(
            self.period,
            [1j * k * self.omega * c for k, c in enumerate(self.coeffs)],
        )

    def antiderivative(self) -> FourierSignal:
        """Returns the mean-zero periodic primitive of f - mean(f)."""
        return FourierSignal(
            self.period,
            [0.0]
            + [
                c / (1j * k * self.omega)
                for k, c in enumerate(self.coeffs[1:], start=1)
            ],
        )

    def without_mean(self) -> FourierSignal:
        """Returns f - mean(f)."""
        return FourierSignal(self.period, (0.0,) + self.coeffs[1:])

    def with_period(self, period: float) -> FourierSignal:
        """Returns the same coefficients seen with another period, i.e. the
        time-dilated signal t -> f(t * T / period).

        """
        return FourierSignal(period, self.coeffs)

    def __add__(self, other: Union[FourierSignal, float]) -> FourierSignal:
        if not isinstance(other, FourierSignal):
            other = FourierSignal(self.period, [float(other)])
        if other.period != self.period:
            raise ValueError(
                "signals must share their period "
                + f"(got {self.period} and {other.period})"
            )
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0j,) * (n - len(self.coeffs))
        b = other.coeffs + (0j,) * (n - len(other.coeffs))
        return FourierSignal(self.period, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __mul__(self, scalar: float) -> FourierSignal:
        return FourierSignal(self.period, [scalar * c for c in self.coeffs])

    __rmul__ = __mul__

    def __neg__(self) -> FourierSignal:
        return -1.0 * self

    def __sub__(self, other: Union[FourierSignal, float]) -> FourierSignal:
        return self + (-other)


def _grid_size(signal: FourierSignal) -> int:
    return 8 * (len(signal.coeffs) - 1) + 64


@cached(cache=LRUCache(maxsize=256), lock=threading.Lock())
def _sup_norm(signal: FourierSignal) -> float:
    lower, upper = signal.sup_norm_bracket()
    if signal.degree == 0:
        return lower
    n = _grid_size(signal)
    h = signal.period / n
    grid = np.linspace(0, signal.period, n, endpoint=False)
    t0 = grid[int(np.argmax(np.abs(signal.eval(grid))))]
    res = optimize.minimize_scalar(
        lambda t: -abs(signal.eval(t)),
        bounds=(t0 - h, t0 + h),
        method="bounded",
        options={"xatol": 1e-12},
    )
    return min(max(lower, -float(res.fun)), upper)
