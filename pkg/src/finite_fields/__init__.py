"""Finite field module for the F_p / F_{p^2} tower"""

from .errors import DivisionByZero, DlogOfZero, FieldTooLarge, NotPrime, NotPrimitive, ReduciblePolynomial
from .quadratic import (
    DEFAULT_MAX_FIELD_ORDER, FieldElement, QuadField, least_primitive_polynomial, make_field, set_max_field_order,
)

__all__ = [
    'FieldElement', 'QuadField', 'make_field', 'least_primitive_polynomial',
    'set_max_field_order', 'DEFAULT_MAX_FIELD_ORDER',
    'NotPrime', 'ReduciblePolynomial', 'NotPrimitive', 'DivisionByZero', 'DlogOfZero', 'FieldTooLarge',
]
