"""Schur multiple zeta values, O-sums and Ohno functions."""

from ._core import (
    ConvergenceFailure,
    Error,
    EvalResult,
    InadmissibleIndex,
    InvalidArgument,
    TableauIndex,
    UnsupportedShape,
    beta_closed_form,
    count_ssyt,
    dual_ez,
    dual_tableau,
    is_admissible,
    ohno,
    osum_ez,
    osum_schur,
    register_dual_pair,
    verify_duality,
    zeta_ez,
    zeta_schur,
)

__all__ = [
    "ConvergenceFailure",
    "Error",
    "EvalResult",
    "InadmissibleIndex",
    "InvalidArgument",
    "TableauIndex",
    "UnsupportedShape",
    "beta_closed_form",
    "count_ssyt",
    "dual_ez",
    "dual_tableau",
    "is_admissible",
    "ohno",
    "osum_ez",
    "osum_schur",
    "register_dual_pair",
    "verify_duality",
    "zeta_ez",
    "zeta_schur",
]
