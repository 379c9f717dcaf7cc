import random
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

from doublestar_ramsey import Colouring2, DoubleStarSpec

sys.path.insert(0, str(Path(__file__).parent))

ACCEPTANCE_LINES: list[str] = []


def random_colouring(rng: random.Random, n: int, p: float = 0.5) -> Colouring2:
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Colouring2(n, tuple(rows))


@st.composite
def colourings(draw, min_n=2, max_n=12):
    n = draw(st.integers(min_n, max_n))
    word = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return Colouring2.from_edges(n, [e for k, e in enumerate(edges) if word >> k & 1])


@st.composite
def specs(draw, max_m1=6):
    m1 = draw(st.integers(1, max_m1))
    m2 = draw(st.integers(1, m1))
    return DoubleStarSpec(m1, m2)


@pytest.fixture
def rng():
    return random.Random(20240601)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
