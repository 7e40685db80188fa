import os
import time
from dataclasses import dataclass

import pytest

from redwords.scan import ScanOptions, ScanReport, scan


def _workers() -> int:
    return min(4, os.cpu_count() or 1)


@dataclass(frozen=True)
class TimedScan:
    report: ScanReport
    elapsed: float


@pytest.fixture(scope="session")
def scan_s6() -> TimedScan:
    """One full-check sweep of S_6, shared by every test that needs it.

    This is the expensive part of the suite (it enumerates 292,864 words for
    the longest element alone), so it runs once per session.
    """
    start = time.perf_counter()
    report = scan(ScanOptions(n=6, workers=_workers()))
    return TimedScan(report=report, elapsed=time.perf_counter() - start)


@pytest.fixture(scope="session")
def scan_s5() -> ScanReport:
    return scan(ScanOptions(n=5, workers=1))
