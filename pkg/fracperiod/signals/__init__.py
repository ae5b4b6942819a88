"""isort:skip_file"""

from .signal import (
    FourierSignal,
    NonConjugateSymmetric,
    NonZeroMean,
    ZeroMean,
)
from .spec import SignalSpec

__all__ = [
    "FourierSignal",
    "NonConjugateSymmetric",
    "NonZeroMean",
    "SignalSpec",
    "ZeroMean",
]
