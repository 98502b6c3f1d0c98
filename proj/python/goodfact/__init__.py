"""Exact engine for integer polynomial factorization, certified root location,
good-factorization certificates, denominator catalogs, and rational series.

Everything exact crosses the boundary as Python ints or decimal strings;
no floating point is ever produced.
"""

from ._core import (
    EngineError,
    Poly,
    Series,
    betti_profile,
    catalog_entry,
    certified_roots,
    factor,
    foxby_bass,
    good_factorization,
    hand_case_crosscheck,
    hypersurface_remark,
    levin_truncation,
    pringsheim_check,
    r_condition,
    scenario,
    verify_theorem1,
)

__all__ = [
    "EngineError",
    "Poly",
    "Series",
    "betti_profile",
    "catalog_entry",
    "certified_roots",
    "factor",
    "foxby_bass",
    "good_factorization",
    "hand_case_crosscheck",
    "hypersurface_remark",
    "levin_truncation",
    "pringsheim_check",
    "r_condition",
    "scenario",
    "verify_theorem1",
]
