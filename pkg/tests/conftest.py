import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from nzcgraph import field_new  # noqa: E402

# (q, n) grid used across the suite: q in 2..5, n in 1..4, at most 1024 vertices
SUITE = [(q, n) for q in (2, 3, 4, 5) for n in (1, 2, 3, 4) if q ** n - 1 <= 1024]

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def gf():
    return field_new


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
