"""Character engine errors"""

from utils.errors import ZassenhausError


class MixedGroups(ZassenhausError):
    """Class function and character live on different groups"""


class NonIntegralAugmentation(ZassenhausError):
    """A character value is not divisible by |N|"""
