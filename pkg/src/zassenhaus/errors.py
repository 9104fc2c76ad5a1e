"""Counterexample pipeline errors"""

from utils.errors import ZassenhausError


class RTableMismatch(ZassenhausError):
    """dlog and norm methods disagree on an r-table"""


class MergeConflict(ZassenhausError):
    """Two search results share a key but carry different payloads"""


class BadRecord(ZassenhausError):
    """Search output line that does not parse as `p q d M flag`"""
