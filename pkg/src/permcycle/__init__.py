"""Permutation polynomials with prescribed cycle type over finite fields of odd order."""

from .construct import (
    BIN,
    CYCLO,
    GEOM_SUM,
    TRI,
    Construction,
    construct_bin,
    construct_cyclotomic,
    construct_geom_sum,
    construct_tri,
    inverse_construction,
    predicted_cycle_type,
    vandermonde_coeffs,
)
from .cycletype import CycleType
from .field import FieldElement, FieldSpec, field_from_order, make_extension_field, make_prime_field
from .poly import SparsePolynomial, canonicalize, parse_poly

__version__ = "0.1.0"

__all__ = [
    "BIN",
    "TRI",
    "CYCLO",
    "GEOM_SUM",
    "Construction",
    "CycleType",
    "FieldElement",
    "FieldSpec",
    "SparsePolynomial",
    "canonicalize",
    "construct_bin",
    "construct_cyclotomic",
    "construct_geom_sum",
    "construct_tri",
    "field_from_order",
    "inverse_construction",
    "make_extension_field",
    "make_prime_field",
    "parse_poly",
    "predicted_cycle_type",
    "vandermonde_coeffs",
]
