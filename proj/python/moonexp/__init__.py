"""Exact q-series, supersingular loci and p-adic valuations."""

from ._core import (
    DomainError,
    InternalError,
    PrecisionError,
    QSeries,
    a1_valuations,
    eta_quotient_params,
    eta_unit_series,
    faber_poly,
    hauptmodul_jn,
    j1_series,
    jn_plus_series,
    p_j1_up,
    run_command,
    series_inv,
    sn_series,
    ss_j1_table,
    ss_j_set,
    thm11_rhs,
    thm12_rhs,
    tn_series,
    u_operator,
    v_operator,
    verify_prime,
    vp_min,
    vp_monster_order,
    vp_p_j1_up,
)

__all__ = [name for name in dir() if not name.startswith("_")]
