"""
Logging Utilities
- Colored console output for library loggers
- structlog routed through the standard library for CLI events
- Log level configuration
"""

import logging
import sys

import colorama
import structlog

LOG_FORMAT = '%(asctime)s | %(levelname)s | %(name)s | %(message)s'


class ColoredFormatter(logging.Formatter):
    """Colored log formatter"""

    COLORS = {
        'DEBUG': colorama.Fore.CYAN,
        'INFO': colorama.Fore.GREEN,
        'WARNING': colorama.Fore.YELLOW,
        'ERROR': colorama.Fore.RED,
        'CRITICAL': colorama.Fore.MAGENTA,
    }

    def format(self, record):
        original = record.levelname
        color = self.COLORS.get(original, colorama.Fore.WHITE)
        record.levelname = f"{color}{original}{colorama.Style.RESET_ALL}"
        try:
            return super().format(record)
        finally:
            record.levelname = original


def setup_logging(log_level: str = "INFO") -> logging.Logger:
    """Configure colored stderr logging and structlog on top of it"""
    colorama.init()

    level = getattr(logging, log_level.upper(), None)
    if not isinstance(level, int):
        raise ValueError(f"Unknown log level: {log_level}")

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(ColoredFormatter(LOG_FORMAT))
    logging.basicConfig(level=level, handlers=[handler], force=True)

    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_log_level,
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            structlog.processors.KeyValueRenderer(key_order=['event'], sort_keys=True),
        ],
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=False,
    )

    return logging.getLogger(__name__)


def get_logger(name: str):
    """structlog logger bound to a standard-library logger of the same name"""
    return structlog.get_logger(name)
