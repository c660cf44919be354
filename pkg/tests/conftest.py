import random
from itertools import combinations

import pytest

from clutters import UniformClutter, gallery


@pytest.fixture
def fig_c():
    return gallery.chordal_pair_c()


@pytest.fixture
def fig_d():
    return gallery.chordal_pair_d()


@pytest.fixture
def stubborn():
    """Linear quotients without decomposability."""
    return gallery.lq_non_decomposable()


@pytest.fixture
def glued_pair():
    return gallery.glued_pair()


@pytest.fixture
def umbrella():
    return gallery.umbrella()


@pytest.fixture
def square_nonlinear():
    return gallery.square_nonlinear()


def random_clutter(rng: random.Random, n: int, d: int, density: float = 0.5) -> UniformClutter:
    circuits = [c for c in combinations(range(1, n + 1), d) if rng.random() < density]
    return UniformClutter.of(n, d, circuits)
