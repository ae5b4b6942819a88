from .diagnostics import DiagnosticsReport, derivative_diagnostics, diagnose
from .operators import (
    CaputoDerivative,
    RLDerivative,
    RLIntegral,
    WeylIntegral,
)
from .quadrature import QuadratureConfig
from .signals import FourierSignal, SignalSpec

__all__ = [
    "CaputoDerivative",
    "DiagnosticsReport",
    "FourierSignal",
    "QuadratureConfig",
    "RLDerivative",
    "RLIntegral",
    "SignalSpec",
    "WeylIntegral",
    "derivative_diagnostics",
    "diagnose",
]
__version__ = "0.1.0"
