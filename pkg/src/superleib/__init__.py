"""Exact computations with nilpotent Leibniz superalgebras over cyclotomic fields."""

from .catalog import FAMILIES, FamilySpec, classified_list, make_family
from .core import SuperAlgebra, Violation, change_basis, check_superidentity, is_leibniz, is_lie
from .invariants import (
    central_series,
    char_sequence,
    invariant_fingerprint,
    jordan_profile,
    natural_gradation,
    nilindex,
)
from .scalars import Scalar, parse_scalar, root_of_unity

__version__ = "0.1.0"

__all__ = [
    "FAMILIES",
    "FamilySpec",
    "Scalar",
    "SuperAlgebra",
    "Violation",
    "central_series",
    "change_basis",
    "char_sequence",
    "check_superidentity",
    "classified_list",
    "invariant_fingerprint",
    "is_leibniz",
    "is_lie",
    "jordan_profile",
    "make_family",
    "natural_gradation",
    "nilindex",
    "parse_scalar",
    "root_of_unity",
]
