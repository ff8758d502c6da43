from __future__ import annotations

import pytest

from helpers import ACCEPTANCE_RESULTS, REF_ROWS, SAMPLE_HG
from tropdd.semiring import IneqSystem


@pytest.fixture
def ref_cone():
    return IneqSystem.from_rows(REF_ROWS)


@pytest.fixture
def sample_hg():
    return SAMPLE_HG


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, status, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{status:4} {name}: {detail}")
