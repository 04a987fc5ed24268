"""Exact tests and transforms for Dold and realizable integer sequences."""

from ._core import (
    DoldkitError,
    Verdict,
    bernoulli_pair,
    congruence_test,
    count_fixed,
    euler_abs,
    euler_fermat_check,
    euler_phi,
    factorize,
    failure_window,
    fibonacci,
    fix_from_zeta,
    generating_hankel_test,
    hankel_dets,
    inverse_B,
    inverse_C,
    is_realizable,
    lefschetz_sequence,
    mobius,
    periodic_expansion,
    rational_fit,
    realize,
    run_cli,
    sharkovskii_precedes,
    stirling1,
    stirling2,
    trace_sequence,
    transform_B,
    transform_C,
    zeta_from_fix,
)

__all__ = [name for name in dir() if not name.startswith("_")]
