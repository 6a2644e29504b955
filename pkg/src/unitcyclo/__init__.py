"""Coefficients of ternary inclusion-exclusion and unitary cyclotomic polynomials."""

from .iepoly import (
    CoeffResult,
    ConsistencyError,
    Representation,
    ResourceCapError,
    Triple,
    TripleError,
    chi,
    coeff_at,
    coeff_set,
    coeff_vector,
    decompose,
    f_val,
    make_triple,
    window_sum,
)

__version__ = "0.1.0"

__all__ = [
    "CoeffResult",
    "ConsistencyError",
    "Representation",
    "ResourceCapError",
    "Triple",
    "TripleError",
    "chi",
    "coeff_at",
    "coeff_set",
    "coeff_vector",
    "decompose",
    "f_val",
    "make_triple",
    "window_sum",
]
