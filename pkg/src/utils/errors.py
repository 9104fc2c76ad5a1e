"""
Error Hierarchy
- Single root for every domain error raised by the packages
- Subclasses ValueError so callers treating bad input generically still work
"""


class ZassenhausError(ValueError):
    """Base class for invalid-input conditions"""
