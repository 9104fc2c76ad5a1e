"""Lattice assembly errors"""

from utils.errors import ZassenhausError


class NegativeMultiplicity(ZassenhausError):
    """A multiplicity is negative because an inequality row fails"""


class BadAuxPrime(ZassenhausError):
    """Auxiliary prime coincides with the side prime or is not prime"""


class CharacterMismatch(ZassenhausError):
    """Assembled character differs from xi_n"""


class UnsupportedShape(ZassenhausError):
    """Subgroup is not of a shape with a closed character formula"""
