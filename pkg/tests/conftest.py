from __future__ import annotations

import pytest

from zdgraph.parse import parse_ring_spec
from zdgraph.rings import build_ring


@pytest.fixture
def ring():
    """``ring("Z(12)")`` builds a ring from its text form."""
    return lambda text: build_ring(parse_ring_spec(text))


# criterion lines recorded by test_acceptance, echoed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
