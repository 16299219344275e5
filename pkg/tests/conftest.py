from pathlib import Path

import pytest

from godel_chain.sequences import level_counts

DATA = Path(__file__).parent / "data"
LABEL = {"0": 0, "a": 1, "b": 2, "1": 3}


def load_truth_table(name):
    rows = []
    for line in (DATA / name).read_text().splitlines():
        *inputs, out = line.split()
        rows.append((tuple(LABEL[x] for x in inputs), LABEL[out]))
    return rows


@pytest.fixture(scope="session")
def godel4_deep():
    """Exact m=4 counts to n=1000; shared by the asymptotic checks."""
    return level_counts(4, 1000)


@pytest.fixture(scope="session")
def godel4_250():
    return level_counts(4, 250)


# one line per acceptance criterion, echoed again in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
