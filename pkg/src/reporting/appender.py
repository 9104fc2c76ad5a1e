"""
Search Record Appender
- One line per pair, flushed as soon as it is written
- Writes retried on OSError
"""

import logging
from pathlib import Path
from typing import Union

from tenacity import retry, retry_if_exception_type, stop_after_attempt, wait_exponential

from zassenhaus import PairRecord

logger = logging.getLogger(__name__)


class SearchAppender:
    """Serializes search records into a newline-delimited file"""

    def __init__(self, path: Union[str, Path]):
        self.path = Path(path)
        self.written = 0
        self.path.write_text("")

    @retry(
        stop=stop_after_attempt(3),
        wait=wait_exponential(multiplier=0.1, min=0.1, max=1),
        retry=retry_if_exception_type(OSError),
        reraise=True,
    )
    def _append_line(self, line: str):
        with open(self.path, "a") as fh:
            fh.write(line + "\n")
            fh.flush()

    def __call__(self, record: PairRecord):
        try:
            self._append_line(record.to_line())
        except OSError as e:
            logger.error(f"❌ Failed to append ({record.p}, {record.q}) to {self.path}: {e}")
            raise
        self.written += 1
