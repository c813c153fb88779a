from pathlib import Path

import pytest

from chernsimons.parse import make_context, parse_form

ROOT = Path(__file__).resolve().parent.parent
CONNECTIONS = ROOT / "demos" / "connections"
GOLDEN = Path(__file__).resolve().parent / "golden"

ACCEPTANCE_LINES = []


@pytest.fixture
def xyz():
    return make_context(["x", "y", "z"])


@pytest.fixture
def form(xyz):
    """Parse an expression in the variables x, y, z."""
    return lambda text: parse_form(text, xyz)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
