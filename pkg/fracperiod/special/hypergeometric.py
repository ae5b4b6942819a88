import math
from typing import List

import attr


class SeriesIllConditioned(Exception):
    """Base exception class for a power series evaluation that would lose
    too many digits to cancellation.

    """

    pass


def _check_lower(self, attribute: attr.Attribute, b: float) -> None:
    if b <= 0 and b == math.floor(b):
        raise ValueError(
            f"'{attribute.name}' must not be a non-positive integer (got {b})"
        )


@attr.s(frozen=True, slots=True)
class Hyp1F2Params:
    """Parameters of the hypergeometric function 1F2(a; b1, b2; z).

    Attributes:
        a: The upper parameter.
        b1: The first lower parameter.
        b2: The second lower parameter.
        z: The argument.

    """

    a = attr.ib(type=float, converter=float)
    b1 = attr.ib(type=float, converter=float, validator=_check_lower)
    b2 = attr.ib(type=float, converter=float, validator=_check_lower)
    z = attr.ib(type=float, converter=float)


# Beyond this modulus the terms grow too large before they decay.
MAX_ARGUMENT = 400.0


def term_ratio(p: Hyp1F2Params, j: int) -> float:
    """Returns the ratio between the terms j + 1 and j of the series."""
    return p.z * (p.a + j) / ((p.b1 + j) * (p.b2 + j) * (j + 1))


def partial_sums(p: Hyp1F2Params, n: int) -> List[float]:
    """Returns the first n partial sums of the series."""
    term, total, sums = 1.0, 1.0, [1.0]
    for j in range(n - 1):
        term *= term_ratio(p, j)
        total += term
        sums.append(total)
    return sums


def hyp1f2(p: Hyp1F2Params) -> float:
    """Computes 1F2(a; b1, b2; z) by summing its power series.

    The summation stops once three consecutive terms fall below 1e-16 times
    the partial sum.

    Args:
        p: The parameters.

    Returns:
        The value of the series.

    Raises:
        SeriesIllConditioned: If |z| > 400.

    """
    if abs(p.z) > MAX_ARGUMENT:
        raise SeriesIllConditioned(
            f"|z| must be <= {MAX_ARGUMENT:g} for the series (got {p.z})"
        )
    term, total, small, j = 1.0, 1.0, 0, 0
    while small < 3:
        term *= term_ratio(p, j)
        total += term
        j += 1
        small = small + 1 if abs(term) < 1e-16 * abs(total) else 0
    return total
