"""isort:skip_file"""

from .gamma import PoleAtNonPositiveInteger, gamma, pochhammer
from .hypergeometric import (
    Hyp1F2Params,
    SeriesIllConditioned,
    hyp1f2,
    partial_sums,
    term_ratio,
)
from .zeta import (
    hurwitz_zeta,
    weyl_kernel_g,
    weyl_kernel_g_truncated,
    weyl_kernel_regular,
)
from .closed_forms import (
    SERIES_LIMIT,
    UnsupportedOrder,
    i_alpha_cos_closed,
    i_alpha_sin_asymptotic,
    i_alpha_sin_closed,
    oscillatory_tail,
    sin_transient,
)

__all__ = [
    "Hyp1F2Params",
    "PoleAtNonPositiveInteger",
    "SERIES_LIMIT",
    "SeriesIllConditioned",
    "UnsupportedOrder",
    "gamma",
    "hurwitz_zeta",
    "hyp1f2",
    "i_alpha_cos_closed",
    "i_alpha_sin_asymptotic",
    "i_alpha_sin_closed",
    "oscillatory_tail",
    "partial_sums",
    "pochhammer",
    "sin_transient",
    "term_ratio",
    "weyl_kernel_g",
    "weyl_kernel_g_truncated",
    "weyl_kernel_regular",
]
