import math

import numpy as np
from scipy import special

from fracperiod.special.gamma import gamma

# Euler-Maclaurin parameters: number of summed terms and of Bernoulli
# corrections.
_SHIFT = 10
_TERMS = 12

_BERNOULLI = special.bernoulli(2 * _TERMS)
_COEFFS = [
    float(_BERNOULLI[2 * j]) / math.factorial(2 * j)
    for j in range(1, _TERMS + 1)
]


def hurwitz_zeta(s: float, q: float) -> float:
    """Computes the Hurwitz zeta function and its analytic continuation.

    Args:
        s: The order, any real number but 1.
        q: The shift, > 0.

    Returns:
        The value of zeta(s, q).

    Raises:
        ValueError: If s is 1 or q is not positive.

    """
    if s == 1:
        raise ValueError("'s' must be != 1 (pole of the zeta function)")
    if not q > 0:
        raise ValueError(f"'q' must be > 0 (got {q})")

    head = math.fsum((q + m) ** -s for m in range(_SHIFT))
    x = q + _SHIFT
    tail = x ** (1 - s) / (s - 1) + 0.5 * x**-s
    rising, power = s, x ** (-s - 1)
    for j, coeff in enumerate(_COEFFS, start=1):
        term = coeff * rising * power
        tail += term
        if term == 0 or abs(term) < 1e-17 * abs(head + tail):
            break
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        power /= x * x
    return head + tail


def weyl_kernel_g(s: float, alpha: float) -> float:
    """Computes the kernel of the Weyl integral of 2 pi-periodic signals.

    The kernel is the regularized sum of (s + 2 pi m)^(alpha - 1) over
    m >= 0, times 2 pi / Gamma(alpha), which is a Hurwitz zeta value.

    Args:
        s: The lag, in (0, 2 pi].
        alpha: The order, in (0, 1).

    Returns:
        The value of the kernel.

    """
    two_pi = 2 * math.pi
    return (
        two_pi**alpha * hurwitz_zeta(1 - alpha, s / two_pi) / gamma(alpha)
    )


def weyl_kernel_regular(s: float, alpha: float) -> float:
    """Computes the kernel of the Weyl integral of 2 pi-periodic signals
    without its singular term 2 pi s^(alpha - 1) / Gamma(alpha).

    Args:
        s: The lag, in [0, 2 pi].
        alpha: The order, in (0, 1).

    Returns:
        The value of the regular part, smooth on [0, 2 pi].

    """
    two_pi = 2 * math.pi
    return (
        two_pi**alpha * hurwitz_zeta(1 - alpha, 1 + s / two_pi) / gamma(alpha)
    )


def weyl_kernel_g_truncated(
    s: float, alpha: float, n: int, chunk: int = 1_000_000
) -> float:
    """Computes the kernel of the Weyl integral by its defining limit,
    truncated after n terms. The error decays like n^(alpha - 1).

    Args:
        s: The lag, in (0, 2 pi].
        alpha: The order, in (0, 1).
        n: The number of terms of the regularized sum.
        chunk: The number of terms summed at once.
            Defaults to 1000000.

    Returns:
        The truncated value of the kernel.

    """
    two_pi = 2 * math.pi
    total = 0.0
    for start in range(1, n + 1, chunk):
        m = np.arange(start, min(start + chunk, n + 1), dtype=float)
        total += float(np.sum((s + two_pi * m) ** (alpha - 1)))
    regular = two_pi * total - (two_pi * n) ** alpha / alpha
    return (two_pi * s ** (alpha - 1) + regular) / gamma(alpha)
