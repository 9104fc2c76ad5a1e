"""Reporting module: run pipeline, report documents, search output and the command line"""

from .appender import SearchAppender
from .cli import EXIT_FAILED, EXIT_INVALID, EXIT_OK, build_parser, main
from .pipeline import run_verification
from .report import BOUNDARY_NOTE, ReportDocument, build_report
from .selftest import SuiteResult, run_selftest

__all__ = [
    'main', 'build_parser', 'EXIT_OK', 'EXIT_FAILED', 'EXIT_INVALID',
    'run_verification', 'ReportDocument', 'build_report', 'BOUNDARY_NOTE',
    'SearchAppender', 'run_selftest', 'SuiteResult',
]
