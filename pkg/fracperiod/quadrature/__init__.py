"""isort:skip_file"""

from .config import FracOrder, QuadratureConfig
from .product import (
    NonPositiveTime,
    ToleranceNotMet,
    product_integrate,
    singular_integral,
)
from .oracle import oracle_singular_integral, singular_integral_of
from .tail import (
    DepthImpractical,
    TruncationDepth,
    smooth_kernel_integral,
    tail_integral,
    truncation_depth,
)

__all__ = [
    "DepthImpractical",
    "FracOrder",
    "NonPositiveTime",
    "QuadratureConfig",
    "ToleranceNotMet",
    "TruncationDepth",
    "oracle_singular_integral",
    "product_integrate",
    "singular_integral",
    "singular_integral_of",
    "smooth_kernel_integral",
    "tail_integral",
    "truncation_depth",
]
