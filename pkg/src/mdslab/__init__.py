"""Structured MDS matrices over GF(2^m)."""

from .field import GF, FieldError, make_context
from .matrix import SingularMatrixError, SquareMatrix, determinant, diag, identity, inverse, is_mds
from .properties import DiagonalPair, Property, PropertyReport, check

__all__ = [
    "GF",
    "FieldError",
    "make_context",
    "SingularMatrixError",
    "SquareMatrix",
    "determinant",
    "diag",
    "identity",
    "inverse",
    "is_mds",
    "DiagonalPair",
    "Property",
    "PropertyReport",
    "check",
]
