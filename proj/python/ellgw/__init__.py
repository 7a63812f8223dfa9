"""Exact local Gromov-Witten invariants of elliptic (multiple) fibers.

Thin wrapper over the C++ core. All values are exact: integers come back
as int, rationals as fractions.Fraction.
"""

from ._core import (
    divisors,
    enumerate_sublattices,
    f_coefficients,
    gr_sides_equal,
    gw0_terms,
    local_gw_multiple,
    local_gw_multiple_assembled,
    local_gw_regular,
    log_f_coefficients,
    partition_moduli,
    sigma,
    verify_suite,
)

__all__ = [
    "divisors",
    "enumerate_sublattices",
    "f_coefficients",
    "gr_sides_equal",
    "gw0_terms",
    "local_gw_multiple",
    "local_gw_multiple_assembled",
    "local_gw_regular",
    "log_f_coefficients",
    "partition_moduli",
    "sigma",
    "verify_suite",
]

__version__ = "0.1.0"
