"""
Configuration Management
- Process settings with Pydantic V2
- Environment variable validation (ZASSENHAUS_ prefix)
- Defaults for exhaustive-check and field-size limits, search workers and sampling
"""

import os

from dotenv import load_dotenv
from pydantic import BaseModel, field_validator

# Load environment variables
load_dotenv()

ENV_PREFIX = "ZASSENHAUS_"
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class Settings(BaseModel):
    """Type-safe configuration with validation"""

    log_level: str = "INFO"

    # Largest l^3 for which assemblies are compared element by element
    max_exhaustive_order: int = 50000

    # Largest p^2 - 1 for which field power and log tables are built
    max_field_order: int = 10_000_000

    # Search
    effective_sample_size: int = 50
    exhaustive_box_limit: int = 100000
    search_workers: int = 4
    random_seed: int = 2019

    # Prometheus text file written at the end of a command; empty disables it
    metrics_file: str = ""

    @field_validator('log_level')
    @classmethod
    def validate_log_level(cls, v):
        v = v.upper()
        if v not in LOG_LEVELS:
            raise ValueError(f'Invalid log level {v!r}')
        return v

    @field_validator('max_exhaustive_order', 'max_field_order', 'effective_sample_size', 'exhaustive_box_limit',
                     'search_workers')
    @classmethod
    def validate_positive(cls, v):
        if v < 1:
            raise ValueError('must be a positive integer')
        return v

    @field_validator('random_seed')
    @classmethod
    def validate_seed(cls, v):
        if v < 0:
            raise ValueError('random seed must be non-negative')
        return v


def _env(name: str, default: str) -> str:
    return os.getenv(f"{ENV_PREFIX}{name}", default)


def load_settings() -> Settings:
    """Load and validate settings from environment"""
    try:
        return Settings(
            log_level=_env('LOG_LEVEL', 'INFO'),
            max_exhaustive_order=int(_env('MAX_EXHAUSTIVE_ORDER', '50000')),
            max_field_order=int(_env('MAX_FIELD_ORDER', '10000000')),
            effective_sample_size=int(_env('EFFECTIVE_SAMPLE_SIZE', '50')),
            exhaustive_box_limit=int(_env('EXHAUSTIVE_BOX_LIMIT', '100000')),
            search_workers=int(_env('SEARCH_WORKERS', '4')),
            random_seed=int(_env('RANDOM_SEED', '2019')),
            metrics_file=_env('METRICS_FILE', ''),
        )
    except Exception as e:
        raise ValueError(f"Configuration error: {e}")
