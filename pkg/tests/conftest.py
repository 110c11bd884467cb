import random

import pytest
from hypothesis import strategies as st

from sierpinski_dim.families import random_connected_graph, random_tree

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def trees(draw, min_n=1, max_n=10):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_tree(n, random.Random(seed))


@st.composite
def connected_graphs(draw, min_n=1, max_n=8, p=None):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    density = draw(st.floats(0.0, 1.0)) if p is None else p
    return random_connected_graph(n, random.Random(seed), density)


@pytest.fixture
def rng():
    return random.Random(1234)
