"""Field construction and arithmetic errors"""

from utils.errors import ZassenhausError


class NotPrime(ZassenhausError):
    """Modulus is not an odd prime"""


class ReduciblePolynomial(ZassenhausError):
    """Defining polynomial has a root in F_p"""


class NotPrimitive(ZassenhausError):
    """Generator does not have order p^2 - 1"""


class DivisionByZero(ZassenhausError, ZeroDivisionError):
    """Inverse of the zero element requested"""


class DlogOfZero(ZassenhausError):
    """Discrete logarithm of zero requested"""


class FieldTooLarge(ZassenhausError):
    """p^2 - 1 exceeds the configured table size"""
