"""Group construction and element arithmetic errors"""

from utils.errors import ZassenhausError


class BadD(ZassenhausError):
    """Action parameter d is even, too small, or does not divide the needed orders"""


class EqualPrimes(ZassenhausError):
    """p and q coincide"""


class MixedParams(ZassenhausError):
    """Elements taken from different groups"""


class NotOrderPQ(ZassenhausError):
    """N-element without both coordinates nonzero"""


class Unsupported(ZassenhausError):
    """Operation only implemented for elements of N"""


class DimensionMismatch(ZassenhausError):
    """Vector length does not match d"""
