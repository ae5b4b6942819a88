import cmath
import math

import attr
import numpy as np
from scipy import integrate

from fracperiod.operators.operator import Operator, OperatorKind
from fracperiod.quadrature import (
    DepthImpractical,
    QuadratureConfig,
    singular_integral,
    tail_integral,
    truncation_depth,
)
from fracperiod.signals import FourierSignal, NonZeroMean
from fracperiod.special import (
    gamma,
    oscillatory_tail,
    weyl_kernel_regular,
)
from fracperiod.utils.validation import _check_periods

ROUTES = ("fourier", "limit", "kernel")


def _check_route(self, attribute: attr.Attribute, route: str) -> None:
    if route not in ROUTES:
        raise ValueError(
            f"'route' must be one of {', '.join(ROUTES)} (got {route})"
        )


@attr.s
class WeylIntegral(Operator):
    """Weyl fractional integral of a mean-zero periodic signal, of order in
    (0, 1): the integral with a memory that extends to minus infinity. It is
    the periodic limit of the Riemann-Liouville integral.

    Attributes:
        eps: The tolerance on the discarded memory of the limit route when
            tail_correction is False. The corrected route always integrates
            the given number of periods and ignores it.
            Defaults to 1e-6.
        periods: The number of whole periods of memory integrated by the
            limit route before the end correction.
            Defaults to 32.
        route: The evaluation route:
            fourier: the Fourier multiplier (i k omega)^(-alpha);
            limit: the integral over [0, t] plus the memory before 0;
            kernel: the convolution over one period with the Hurwitz zeta
            kernel.
            Defaults to fourier.
        tail_correction: True to sum the memory beyond the last period from
            its expansion at infinity, False to truncate the memory at the
            depth that meets eps, which may be impractical.
            Defaults to True.

    """

    kind = OperatorKind.WEYL_INTEGRAL

    route = attr.ib(
        kw_only=True, default="fourier", type=str, validator=_check_route
    )

    eps = attr.ib(
        kw_only=True,
        default=1e-6,
        type=float,
        converter=float,
        validator=attr.validators.gt(0),
    )

    periods = attr.ib(
        kw_only=True,
        default=32,
        type=int,
        validator=[attr.validators.instance_of(int), _check_periods],
    )

    tail_correction = attr.ib(
        kw_only=True,
        default=True,
        type=bool,
        validator=attr.validators.instance_of(bool),
    )

    def transform(self, f: FourierSignal) -> FourierSignal:
        """Returns the Weyl integral of a mean-zero signal, as a signal.

        Args:
            f: The signal.

        Returns:
            The signal with amplitudes c_k (i k omega)^(-alpha).

        Raises:
            NonZeroMean: If the mean of the signal is not zero.

        """
        self._check_mean(f)
        rotation = cmath.exp(-0.5j * math.pi * self.alpha)
        return FourierSignal(
            f.period,
            [0.0]
            + [
                c * (k * f.omega) ** -self.alpha * rotation
                for k, c in enumerate(f.coeffs[1:], start=1)
            ],
        )

    def _check_mean(self, f: FourierSignal) -> None:
        if not f.has_zero_mean():
            raise NonZeroMean(
                "the Weyl integral needs a mean-zero signal "
                + f"(got mean {f.mean()})"
            )

    def _evaluate(self, f: FourierSignal, t: float) -> float:
        self._check_mean(f)
        if f.without_mean().is_zero():
            return 0.0
        if self.route == "fourier":
            return self.transform(f).eval(t)
        if self.route == "limit":
            return self._evaluate_limit(f, t)
        return self._evaluate_kernel(f, t)

    def _evaluate_limit(self, f: FourierSignal, t: float) -> float:
        f = f.without_mean()
        if t <= 0:
            t += (math.floor(-t / f.period) + 1) * f.period
        head = singular_integral(f, self.alpha, t, self.config, self.verbose)

        if self.tail_correction:
            memory = tail_integral(f, self.alpha, t, self.periods)
            memory += self._end_correction(f, t, self.periods)
        else:
            depth = truncation_depth(
                self.alpha,
                f.period,
                t,
                0.5 * self.eps * gamma(self.alpha),
                f.sup_norm(),
                mass=f.positive_part_mass(),
            )
            if depth.impractical:
                raise DepthImpractical(
                    f"truncating the memory at {self.eps:g} needs about "
                    + f"10^{depth.log10_periods:.1f} periods"
                )
            if self.verbose == 2:
                print(f"> memory truncated after {depth.periods} periods")
            memory = tail_integral(f, self.alpha, t, depth.periods)
        return head + memory / gamma(self.alpha)

    def _end_correction(self, f: FourierSignal, t: float, n: int) -> float:
        """Returns the memory before -nT, summed harmonic by harmonic from
        the expansion at infinity of int_Z^inf u^(alpha - 1) e^(-i k omega
        u) du, Z = t + nT.

        """
        z = t + n * f.period
        res = 0j
        for k, c in enumerate(f.coeffs[1:], start=1):
            if c == 0:
                continue
            lam = k * f.omega
            tail = oscillatory_tail(self.alpha, lam * z)
            res += (
                c
                * cmath.exp(1j * lam * (t - z))
                * lam**-self.alpha
                * tail
            )
        return 2 * res.real

    def _evaluate_kernel(self, f: FourierSignal, t: float) -> float:
        # The kernel splits into 2 pi s^(alpha - 1) / Gamma(alpha), taken by
        # the algebraic weight of quad, plus a smooth regular part.
        two_pi = 2 * math.pi
        h = f.without_mean().with_period(two_pi)
        x = two_pi * t / f.period

        def shifted(s: float) -> float:
            return h.eval(x - s)

        def regular(s: float) -> float:
            return h.eval(x - s) * weyl_kernel_regular(s, self.alpha)

        singular = integrate.quad(
            shifted,
            0,
            two_pi,
            weight="alg",
            wvar=(self.alpha - 1, 0),
            epsabs=1e-14,
            epsrel=1e-12,
            limit=200,
        )[0]
        smooth = integrate.quad(
            regular, 0, two_pi, epsabs=1e-14, epsrel=1e-12, limit=200
        )[0]
        value = singular / gamma(self.alpha) + smooth / two_pi
        return float((f.period / two_pi) ** self.alpha * value)


def weyl_integral_fourier(f: FourierSignal, alpha: float, t: float) -> float:
    """Computes the Weyl integral of a mean-zero signal by its Fourier
    multiplier.

    Raises:
        NonZeroMean: If the mean of the signal is not zero.

    """
    return WeylIntegral(alpha, route="fourier").evaluate(f, t)


def weyl_integral_limit(
    f: FourierSignal,
    alpha: float,
    t: float,
    eps: float = 1e-6,
    cfg: QuadratureConfig = QuadratureConfig(),
    tail_correction: bool = True,
) -> float:
    """Computes the Weyl integral of a mean-zero signal as the limit of
    integrals over [t - nT, t].

    Args:
        f: The signal.
        alpha: The order, in (0, 1).
        t: The time.
        eps: The tolerance on the discarded memory, used only to pick the
            truncation depth when tail_correction is False.
            Defaults to 1e-6.
        cfg: The quadrature configuration.
            Defaults to QuadratureConfig().
        tail_correction: False to truncate the memory instead of summing
            its far end from an expansion.
            Defaults to True.

    Returns:
        The Weyl integral at time t.

    Raises:
        DepthImpractical: If the truncation needs too many periods.
        NonZeroMean: If the mean of the signal is not zero.

    """
    return WeylIntegral(
        alpha,
        config=cfg,
        route="limit",
        eps=eps,
        tail_correction=tail_correction,
    ).evaluate(f, t)


def weyl_integral_kernel(f: FourierSignal, alpha: float, t: float) -> float:
    """Computes the Weyl integral of a mean-zero signal as a convolution
    over one period with the Hurwitz zeta kernel.

    Raises:
        NonZeroMean: If the mean of the signal is not zero.

    """
    return WeylIntegral(alpha, route="kernel").evaluate(f, t)


def weyl_grid(
    f: FourierSignal, alpha: float, ts: np.ndarray
) -> np.ndarray:
    """Evaluates the Weyl integral of a mean-zero signal on a grid of
    times, by its Fourier multiplier.

    """
    return np.asarray(WeylIntegral(alpha).transform(f).eval(ts), dtype=float)
