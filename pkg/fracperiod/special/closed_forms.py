"""Closed forms of the fractional integrals of sin and cos.

For t below SERIES_LIMIT they come from 1F2 power series, beyond it from
their expansion at infinity: the periodic Weyl part plus the oscillatory
tail series of the memory before time 0.

"""
import math

from fracperiod.special.gamma import gamma
from fracperiod.special.hypergeometric import Hyp1F2Params, hyp1f2


class UnsupportedOrder(Exception):
    """Base exception class for an order that has no dedicated expansion."""

    pass


SERIES_LIMIT = 20.0

_ASYMPTOTIC_ORDERS = (0.5, 1.5)


def _check_order(alpha: float) -> None:
    if not 0 < alpha < 2:
        raise ValueError(f"'alpha' must be in (0, 2) (got {alpha})")


def oscillatory_tail(alpha: float, t: float) -> complex:
    """Sums the expansion of the integral of u^(alpha - 1) e^(-i u) over
    (t, infinity), up to the factor e^(-i t).

    The expansion is asymptotic; it is cut at its smallest term.

    Args:
        alpha: The order.
        t: The lower end, large.

    Returns:
        The sum over m of (alpha - 1)(alpha - 2)...(alpha - m)
        t^(alpha - 1 - m) / i^(m + 1).

    """
    beta = alpha - 1
    term = -1j * t**beta
    total = term
    for m in range(1, 200):
        nxt = term * (beta - m + 1) / (1j * t)
        if nxt == 0 or abs(nxt) >= abs(term):
            break
        total += nxt
        term = nxt
        if abs(term) < 1e-17 * abs(total):
            break
    return total


def i_alpha_sin_closed(alpha: float, t: float) -> float:
    """Computes the fractional integral of sin from 0.

    Args:
        alpha: The order, in (0, 2).
        t: The time, >= 0.

    Returns:
        I^alpha sin(t).

    """
    _check_order(alpha)
    if t == 0:
        return 0.0
    if t < SERIES_LIMIT:
        p = Hyp1F2Params(1, alpha / 2 + 1, (alpha + 3) / 2, -t * t / 4)
        return t ** (alpha + 1) / gamma(alpha + 2) * hyp1f2(p)
    tail = oscillatory_tail(alpha, t)
    return math.sin(t - alpha * math.pi / 2) - tail.imag / gamma(alpha)


def i_alpha_cos_closed(alpha: float, t: float) -> float:
    """Computes the fractional integral of cos from 0.

    Args:
        alpha: The order, in (0, 2).
        t: The time, >= 0.

    Returns:
        I^alpha cos(t).

    """
    _check_order(alpha)
    if t == 0:
        return 0.0
    if t < SERIES_LIMIT:
        p = Hyp1F2Params(1, (alpha + 1) / 2, alpha / 2 + 1, -t * t / 4)
        return t**alpha / gamma(alpha + 1) * hyp1f2(p)
    tail = oscillatory_tail(alpha, t)
    return math.cos(t - alpha * math.pi / 2) - tail.real / gamma(alpha)


def i_alpha_sin_asymptotic(alpha: float, t: float) -> float:
    """Computes the first terms at infinity of I^alpha sin for the orders
    1/2 and 3/2.

    Args:
        alpha: The order, 0.5 or 1.5.
        t: The time, >= 20.

    Returns:
        The periodic part plus the leading transient.

    Raises:
        UnsupportedOrder: If the order is neither 0.5 nor 1.5.
        ValueError: If t < 20.

    """
    if alpha not in _ASYMPTOTIC_ORDERS:
        raise UnsupportedOrder(
            f"'alpha' must be one of {_ASYMPTOTIC_ORDERS} (got {alpha})"
        )
    if t < SERIES_LIMIT:
        raise ValueError(f"'t' must be >= {SERIES_LIMIT:g} (got {t})")
    root2 = math.sqrt(2)
    if alpha == 0.5:
        return 1 / math.sqrt(math.pi * t) + (
            math.sin(t) - math.cos(t)
        ) / root2
    return 2 * math.sqrt(t) / math.sqrt(math.pi) - (
        math.sin(t) + math.cos(t)
    ) / root2


def sin_transient(alpha: float, t: float) -> float:
    """Returns the first two terms at infinity of I^alpha sin(t) minus its
    periodic part sin(t - alpha pi / 2), for any order.

    """
    _check_order(alpha)
    return (
        t ** (alpha - 3)
        * (t * t - (alpha - 1) * (alpha - 2))
        / gamma(alpha)
    )
