import random

import pytest
from hypothesis import strategies as st

from fmpartners.lattice import DegenerateLatticeError, GramMatrix


@pytest.fixture
def rng():
    return random.Random(20261016)


@st.composite
def even_grams(draw, max_rank=4, max_entry=6):
    r = draw(st.integers(1, max_rank))
    entries = [[0] * r for _ in range(r)]
    for i in range(r):
        entries[i][i] = 2 * draw(st.integers(-max_entry, max_entry))
        for j in range(i):
            entries[i][j] = entries[j][i] = draw(st.integers(-max_entry, max_entry))
    try:
        return GramMatrix(entries)
    except DegenerateLatticeError:
        from hypothesis import assume

        assume(False)


_ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_log():
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
