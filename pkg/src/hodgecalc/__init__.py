"""hodgecalc: exact Hilbert series of Hodge ideals of hyperplane arrangements.

The package computes, for any central hyperplane arrangement over Q, the
intersection-lattice combinatorics, the equivariant motivic Chern class of
the complement, and the generating function of the Hilbert series of all
Hodge ideals of the arrangement divisor -- every step in exact arithmetic and
cross-checked against independent brute-force oracles.  A FastAPI service
exposes the computations; the ``hodgecalc`` CLI is a thin client for it.
"""

__version__ = "0.1.0"

from .arrangement import (
    Arrangement,
    Flat,
    Hyperplane,
    InputError,
    IntersectionLattice,
    build_lattice,
    builtin_family,
    canonicalize_hyperplane,
    char_polynomial,
    deletion_restriction,
    family_from_spec,
    load_arrangement,
    poincare_polynomial,
)
from .exactpoly import (
    BivariatePoly,
    ClosedForm,
    LaurentPoly,
    RatFunc,
    YSeries,
)
from .hodge import (
    HodgeSeriesResult,
    dims_table,
    hilbert_series_of_ideal,
    hodge_generating_function,
    hodge_generating_function_via_mc,
    multiplier_ideal_series,
    snc_closed_form,
)
from .oracles import (
    compare_with_series,
    multiplier_oracle_dims,
    snc_fp_dimension,
    snc_ideal_dims,
)

__all__ = [
    "Arrangement",
    "BivariatePoly",
    "ClosedForm",
    "Flat",
    "HodgeSeriesResult",
    "Hyperplane",
    "InputError",
    "IntersectionLattice",
    "LaurentPoly",
    "RatFunc",
    "YSeries",
    "build_lattice",
    "builtin_family",
    "canonicalize_hyperplane",
    "char_polynomial",
    "compare_with_series",
    "deletion_restriction",
    "dims_table",
    "family_from_spec",
    "hilbert_series_of_ideal",
    "hodge_generating_function",
    "hodge_generating_function_via_mc",
    "load_arrangement",
    "multiplier_ideal_series",
    "multiplier_oracle_dims",
    "poincare_polynomial",
    "snc_closed_form",
    "snc_fp_dimension",
    "snc_ideal_dims",
]
