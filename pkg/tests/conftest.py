import math

import numpy as np
import pytest
from hypothesis import strategies as st

from hypdisc import DiscPoint


def random_point(rng, rmax=0.95):
    r = rmax * math.sqrt(rng.uniform())
    t = rng.uniform(0.0, 2.0 * math.pi)
    return DiscPoint(r * math.cos(t), r * math.sin(t))


@st.composite
def disc_points(draw, rmax=0.95):
    r = draw(st.floats(0.0, rmax))
    t = draw(st.floats(0.0, 2.0 * math.pi))
    return DiscPoint(r * math.cos(t), r * math.sin(t))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
