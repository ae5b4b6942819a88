from typing import Callable, Dict, List, Sequence, Tuple, Union

import numpy as np

Harmonics = Dict[int, complex]

Grid = Union[Sequence[float], np.ndarray]

Sample = Tuple[float, float]
Samples = List[Sample]

# Vectorized real function of time, e.g. a bound FourierSignal.eval.
RealFunc = Callable[[np.ndarray], np.ndarray]

Bracket = Tuple[float, float]
