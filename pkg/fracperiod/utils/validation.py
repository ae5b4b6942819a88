import math
from typing import Optional

import attr


def _check_period(self, attribute: attr.Attribute, period: float) -> None:
    """Checks if a given period is valid for a periodic signal.

    Args:
        attribute: The attribute.
        period: The period to check the validity.

    Raises:
        ValueError: If the period is invalid.

    """
    if not math.isfinite(period) or period <= 0:
        raise ValueError(f"'period' must be finite and > 0 (got {period})")


def _check_tolerance(self, attribute: attr.Attribute, tol: float) -> None:
    """Checks if a given tolerance is strictly positive.

    Args:
        attribute: The attribute.
        tol: The tolerance to check the validity.

    Raises:
        ValueError: If the tolerance is invalid.

    """
    if not tol > 0:
        raise ValueError(f"'{attribute.name}' must be > 0 (got {tol})")


def _check_panels(self, attribute: attr.Attribute, panels: int) -> None:
    """Checks if a given number of panels per period is valid.

    Args:
        attribute: The attribute.
        panels: The number of panels per period to check the validity.

    Raises:
        ValueError: If the number of panels is invalid.

    """
    if panels < 8:
        raise ValueError(
            f"'panels_per_period' must be >= 8 (got {panels})"
        )


def _check_grading(
    self, attribute: attr.Attribute, grading: Optional[float]
) -> None:
    """Checks if a given grading exponent is valid.

    Args:
        attribute: The attribute.
        grading: The grading exponent to check the validity.

    Raises:
        ValueError: If the grading exponent is invalid.

    """
    if grading is not None and not 1 <= grading <= 10:
        raise ValueError(
            f"'grading_exponent' must be None or in [1, 10] (got {grading})"
        )


def _check_refinements(
    self, attribute: attr.Attribute, refinements: int
) -> None:
    """Checks if a given number of mesh refinements is valid.

    Args:
        attribute: The attribute.
        refinements: The number of refinements to check the validity.

    Raises:
        ValueError: If the number of refinements is invalid.

    """
    if refinements < 0:
        raise ValueError(
            f"'max_refinements' must be >= 0 (got {refinements})"
        )


def _check_jobs(self, attribute: attr.Attribute, n_jobs: int) -> None:
    """Checks if a given number of processes is correct.

    Args:
        attribute: The attribute.
        n_jobs: The number of processes to check the validity.

    Raises:
        ValueError: If the number of processes is invalid.

    """
    if n_jobs is not None and (n_jobs < -1 or n_jobs == 0):
        raise ValueError(
            f"'n_jobs' must be None, or equal to -1, or > 0 (got {n_jobs})"
        )


def _check_periods(self, attribute: attr.Attribute, periods: int) -> None:
    """Checks if a given number of whole periods is valid.

    Args:
        attribute: The attribute.
        periods: The number of periods to check the validity.

    Raises:
        ValueError: If the number of periods is invalid.

    """
    if periods < 1:
        raise ValueError(f"'{attribute.name}' must be >= 1 (got {periods})")


def _check_points(self, attribute: attr.Attribute, points: int) -> None:
    """Checks if a given number of grid points is valid.

    Args:
        attribute: The attribute.
        points: The number of grid points to check the validity.

    Raises:
        ValueError: If the number of points is invalid.

    """
    if points < 2:
        raise ValueError(f"'points' must be >= 2 (got {points})")


def _check_t_max(self, attribute: attr.Attribute, t_max: float) -> None:
    """Checks if the upper end of a time grid lies above the lower end.

    Args:
        attribute: The attribute.
        t_max: The upper end of the grid to check the validity.

    Raises:
        ValueError: If the grid bounds are invalid.

    """
    if self.t_min < 0:
        raise ValueError(f"'t_min' must be >= 0 (got {self.t_min})")
    if not t_max > self.t_min:
        raise ValueError(
            f"'t_max' must be > 't_min' (got {t_max} <= {self.t_min})"
        )

