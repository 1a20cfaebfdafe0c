"""Exact re-derivation of the approximation certificate for the pivot algorithm."""
from .checks import (
    check_omega_symmetries,
    reproduce_table2,
    verify_appendix_B_cases,
    verify_condition1,
    verify_condition2_probability,
)
from .functions import (
    ALPHA_PROBABILITY,
    ALPHA_TRIANGLE,
    L_VERTICES,
    LT_VERTICES,
    Mode,
    delta,
    f_minus,
    f_plus,
    h,
    omega,
    phi,
    product_sum,
    psi,
)
from .report import CertificateReport

__all__ = [
    "ALPHA_PROBABILITY",
    "ALPHA_TRIANGLE",
    "CertificateReport",
    "L_VERTICES",
    "LT_VERTICES",
    "Mode",
    "check_omega_symmetries",
    "delta",
    "f_minus",
    "f_plus",
    "h",
    "omega",
    "phi",
    "product_sum",
    "psi",
    "reproduce_table2",
    "verify_appendix_B_cases",
    "verify_condition1",
    "verify_condition2_probability",
]
