"""Utils module for logging and the shared error root"""

from .errors import ZassenhausError
from .logging import get_logger, setup_logging

__all__ = ['setup_logging', 'get_logger', 'ZassenhausError']
