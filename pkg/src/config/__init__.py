"""Configuration module for settings and run configurations"""

from .run_config import ConfigParseError, RunConfig, load_run_config, parse_run_config
from .settings import Settings, load_settings

__all__ = ['Settings', 'load_settings', 'RunConfig', 'ConfigParseError', 'load_run_config', 'parse_run_config']
