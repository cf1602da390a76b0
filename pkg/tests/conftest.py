import pytest

from helpers import ACCEPTANCE_LINES, sphere

@pytest.fixture
def s2():
    return sphere(2)

@pytest.fixture
def s3():
    return sphere(3)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
