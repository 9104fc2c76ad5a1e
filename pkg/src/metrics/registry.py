"""
Run Metrics
- Prometheus collectors in a private registry
- Written as a text file at the end of a command
"""

import logging
import time
from contextlib import contextmanager

from prometheus_client import CollectorRegistry, Counter, Histogram, write_to_textfile

logger = logging.getLogger(__name__)


class RunMetrics:
    """Counters and timings for one CLI invocation"""

    def __init__(self):
        self.registry = CollectorRegistry()
        self.start_time = time.time()
        self.setup_metrics()

    def setup_metrics(self):
        """Setup Prometheus metrics"""

        self.verdicts_total = Counter(
            'verdicts_total',
            'Verdicts issued',
            ['outcome'],
            registry=self.registry
        )

        self.fields_constructed_total = Counter(
            'fields_constructed_total',
            'Quadratic fields built',
            registry=self.registry
        )

        self.pairs_evaluated_total = Counter(
            'pairs_evaluated_total',
            'Prime pairs evaluated by the search',
            ['guaranteed'],
            registry=self.registry
        )

        self.check_duration_seconds = Histogram(
            'check_duration_seconds',
            'Time spent per check',
            ['check'],
            registry=self.registry
        )

    def record_verdict(self, outcome: str):
        self.verdicts_total.labels(outcome=outcome).inc()

    def record_field(self):
        self.fields_constructed_total.inc()

    def record_pair(self, guaranteed: bool):
        self.pairs_evaluated_total.labels(guaranteed=str(guaranteed).lower()).inc()

    @contextmanager
    def time_check(self, name: str):
        with self.check_duration_seconds.labels(check=name).time():
            yield

    def sample_value(self, name: str, **labels) -> float:
        value = self.registry.get_sample_value(name, labels)
        return value or 0.0

    def write(self, path: str):
        write_to_textfile(path, self.registry)
        logger.info(f"📊 Metrics written to {path}")
