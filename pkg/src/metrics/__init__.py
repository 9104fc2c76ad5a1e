"""Metrics module for run counters and check timings"""

from .registry import RunMetrics

__all__ = ['RunMetrics']
