"""isort:skip_file"""

from .operator import Operator, OperatorKind, max_processes

from .integral import RLIntegral, rl_integral
from .derivative import (
    CaputoDerivative,
    RLDerivative,
    SingularAtZero,
    caputo_derivative,
    rl_derivative,
)
from .weyl import (
    WeylIntegral,
    weyl_grid,
    weyl_integral_fourier,
    weyl_integral_kernel,
    weyl_integral_limit,
)

__all__ = [
    "CaputoDerivative",
    "Operator",
    "OperatorKind",
    "RLDerivative",
    "RLIntegral",
    "SingularAtZero",
    "WeylIntegral",
    "caputo_derivative",
    "max_processes",
    "rl_derivative",
    "rl_integral",
    "weyl_grid",
    "weyl_integral_fourier",
    "weyl_integral_kernel",
    "weyl_integral_limit",
]
