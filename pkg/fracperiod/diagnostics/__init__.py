"""isort:skip_file"""

from .report import (
    Boundedness,
    BoundednessVerdict,
    CSV_COLUMNS,
    DefectCurve,
    Decomposition,
    DiagnosticsReport,
    GrowthFit,
    NonperiodicityCertificate,
    write_csv,
)
from .boundedness import classify_boundedness, growth_fit, probe_grid
from .defect import (
    CertificateNotFound,
    defect_at,
    defect_bound,
    nonperiodicity_certificate,
    sap_defect,
)
from .decomposition import decompose_asymptotic, fit_decay, shift_sequence
from .pipeline import derivative_diagnostics, diagnose
from .suite import CHECKS, TABLE_COLUMNS, run_checks

__all__ = [
    "Boundedness",
    "BoundednessVerdict",
    "CHECKS",
    "CSV_COLUMNS",
    "CertificateNotFound",
    "DefectCurve",
    "Decomposition",
    "DiagnosticsReport",
    "GrowthFit",
    "NonperiodicityCertificate",
    "TABLE_COLUMNS",
    "classify_boundedness",
    "decompose_asymptotic",
    "defect_at",
    "defect_bound",
    "derivative_diagnostics",
    "diagnose",
    "fit_decay",
    "growth_fit",
    "nonperiodicity_certificate",
    "probe_grid",
    "run_checks",
    "sap_defect",
    "shift_sequence",
    "write_csv",
]
