import random

import pytest
from hypothesis import settings, strategies as st

from multipascal import MultiIndex, PointSet
from multipascal.pointset import random_staircase

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

# the running example of the README and its condition-violating cousin
EXAMPLE_R = [(0, 0), (0, 1), (1, 0), (0, 2)]
BROKEN_R = [(0, 0), (1, 0), (0, 2)]
STAIR_R = [(0, 0), (0, 1), (1, 0), (2, 0)]
FIVE_R = [(0, 0), (0, 1), (1, 0), (1, 1), (2, 0)]


def multi_indices(n, max_entry=4):
    return st.lists(st.integers(0, max_entry), min_size=n, max_size=n).map(MultiIndex)


@st.composite
def staircases(draw, max_n=3, max_points=25):
    n = draw(st.integers(1, max_n))
    size = draw(st.integers(1, max_points))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_staircase(random.Random(seed), n, size)


@pytest.fixture
def example_set():
    return PointSet(EXAMPLE_R)


@pytest.fixture
def broken_set():
    return PointSet(BROKEN_R)


@pytest.fixture
def stair_set():
    return PointSet(STAIR_R)
