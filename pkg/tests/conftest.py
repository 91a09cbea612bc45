import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

_acceptance_lines = []


def _m(rows):
    return [[Fraction(x) for x in row] for row in rows]


# Example 1: canonical unfolding and the relabelled one
EXAMPLE_B = _m([[3, 1, 4, 5], [1, 3, 8, "0.1"], [2, 2, 5, 5], [7, 4, 9, "9.9"]])
EXAMPLE_B_PRIME = _m([["9.9", 7, 9, 4], [5, 3, 4, 1], [5, 2, 5, 2], ["0.1", 1, 8, 3]])
EXAMPLE_P = [[0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0], [1, 0, 0, 0]]


@pytest.fixture
def fixtures_dir():
    return FIXTURES


@pytest.fixture
def acceptance_log():
    return _acceptance_lines


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
