import itertools

import pytest

from dsskit.curve import GridPoint

ACCEPTANCE_LINES: list[str] = []


def path_of_word(word) -> list[GridPoint]:
    pts = [GridPoint(0, 0)]
    for c in word:
        pts.append(pts[-1].step(int(c)))
    return pts


def binary_words(max_len: int, min_len: int = 1):
    for n in range(min_len, max_len + 1):
        yield from itertools.product((0, 1), repeat=n)


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
