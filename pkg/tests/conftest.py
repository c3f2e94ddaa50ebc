import time

import pytest

from colebrook.sweep import sweep


class TimedReport:
    """Default-grid sweep report plus its wall-clock duration."""

    def __init__(self):
        t0 = time.perf_counter()
        self.report = sweep()
        self.seconds = time.perf_counter() - t0


@pytest.fixture(scope="session")
def default_sweep():
    return TimedReport()
