import math

from scipy import special


class PoleAtNonPositiveInteger(Exception):
    """Base exception class for an evaluation of the Gamma function at one
    of its poles.

    """

    pass


def gamma(x: float) -> float:
    """Computes the Gamma function.

    Args:
        x: The argument, which must not be a non-positive integer.

    Returns:
        The value of Gamma at x.

    Raises:
        PoleAtNonPositiveInteger: If x is 0, -1, -2, ...

    """
    if x <= 0 and x == math.floor(x):
        raise PoleAtNonPositiveInteger(f"Gamma has a pole at {x}")
    return float(special.gamma(x))


def pochhammer(a: float, j: int) -> float:
    """Computes the rising factorial (a)_j = a (a + 1) ... (a + j - 1).

    Args:
        a: The base.
        j: The number of factors.

    Returns:
        The rising factorial, 1 for j = 0.

    Raises:
        ValueError: If j is negative.

    """
    if j < 0:
        raise ValueError(f"'j' must be >= 0 (got {j})")
    return float(math.prod(a + i for i in range(j)))
