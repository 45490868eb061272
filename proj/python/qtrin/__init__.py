"""Exact q-series toolkit for refined q-trinomial identities."""

from ._qtrin import (
    Error,
    QPoly,
    QSeries,
    branching_function,
    conj_lhs,
    conj_rhs,
    f_poly,
    fermionic_char_sum,
    identity_names,
    kseries_lhs,
    kseries_rhs,
    qbinomial,
    qtrinomial2,
    qtrinomial_T,
    refined_T,
    refined_T_dual_check,
    solve_mn,
    string_function,
    theorem1_check,
    verify_identity,
    virasoro_char,
)

__all__ = [
    "Error",
    "QPoly",
    "QSeries",
    "branching_function",
    "conj_lhs",
    "conj_rhs",
    "f_poly",
    "fermionic_char_sum",
    "identity_names",
    "kseries_lhs",
    "kseries_rhs",
    "qbinomial",
    "qtrinomial2",
    "qtrinomial_T",
    "refined_T",
    "refined_T_dual_check",
    "solve_mn",
    "string_function",
    "theorem1_check",
    "verify_identity",
    "virasoro_char",
]
