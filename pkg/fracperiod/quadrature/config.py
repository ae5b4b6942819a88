from __future__ import annotations

from typing import Any, Dict, Optional

import attr

from fracperiod.utils.validation import (  # isort: skip
    _check_grading,
    _check_panels,
    _check_refinements,
    _check_tolerance,
)


def _check_order(self, attribute: attr.Attribute, upper: float) -> None:
    if not 0 < self.alpha < upper:
        raise ValueError(
            f"'alpha' must be in (0, {upper:g}) (got {self.alpha})"
        )


@attr.s(frozen=True, slots=True)
class FracOrder:
    """Fractional order together with the upper end of its admissible range.

    Attributes:
        alpha: The order.
        upper: The upper end of the open range (0, upper).
            Defaults to 2.0.

    """

    alpha = attr.ib(type=float, converter=float)

    upper = attr.ib(
        default=2.0, type=float, converter=float, validator=_check_order
    )

    @classmethod
    def integral(cls, alpha: float) -> FracOrder:
        """Returns an order of a Riemann-Liouville integral, in (0, 2)."""
        return cls(alpha, 2.0)

    @classmethod
    def derivative(cls, alpha: float) -> FracOrder:
        """Returns an order of a Caputo or Riemann-Liouville derivative, in
        (0, 1).

        """
        return cls(alpha, 1.0)

    @classmethod
    def weyl(cls, alpha: float) -> FracOrder:
        """Returns an order of a Weyl integral, in (0, 1)."""
        return cls(alpha, 1.0)

    def __float__(self) -> float:
        return self.alpha


@attr.s(frozen=True, slots=True)
class QuadratureConfig:
    """Accuracy and mesh policy of the weakly singular integrals.

    Attributes:
        abs_tol: The absolute tolerance.
            Defaults to 1e-12.
        grading_exponent: The grading exponent of the mesh near the singular
            end, in [1, 10]. None uses 1 / alpha clamped to [1, 10].
            Defaults to None.
        max_refinements: The number of extra mesh doublings allowed after
            the first comparison of two mesh levels.
            Defaults to 3.
        panels_per_period: The number of panels per period of the highest
            harmonic, on the coarsest mesh.
            Defaults to 64.
        rel_tol: The relative tolerance.
            Defaults to 1e-10.

    """

    rel_tol = attr.ib(
        kw_only=True,
        default=1e-10,
        type=float,
        converter=float,
        validator=_check_tolerance,
    )

    abs_tol = attr.ib(
        kw_only=True,
        default=1e-12,
        type=float,
        converter=float,
        validator=_check_tolerance,
    )

    panels_per_period = attr.ib(
        kw_only=True,
        default=64,
        type=int,
        validator=[attr.validators.instance_of(int), _check_panels],
    )

    grading_exponent = attr.ib(
        kw_only=True,
        default=None,
        type=Optional[float],
        validator=_check_grading,
    )

    max_refinements = attr.ib(
        kw_only=True,
        default=3,
        type=int,
        validator=[attr.validators.instance_of(int), _check_refinements],
    )

    def grading(self, alpha: float) -> float:
        """Returns the grading exponent used for an order.

        Args:
            alpha: The order.

        Returns:
            The configured exponent, or else 1 / alpha clamped to [1, 10].

        """
        if self.grading_exponent is not None:
            return self.grading_exponent
        return min(max(1 / alpha, 1.0), 10.0)

    def to_dict(self) -> Dict[str, Any]:
        """Returns the configuration as a dictionary, in field order."""
        return attr.asdict(self)
