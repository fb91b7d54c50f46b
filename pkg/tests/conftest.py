import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from knapscale import max_knapsack, min_knapsack


@st.composite
def min_instances(draw, max_n=8, weight_max=40, size_max=15):
    n = draw(st.integers(1, max_n))
    weights = draw(st.lists(st.integers(1, weight_max), min_size=n, max_size=n))
    sizes = draw(st.lists(st.integers(1, size_max), min_size=n, max_size=n))
    demand = draw(st.integers(0, sum(sizes)))
    return min_knapsack(weights, sizes, demand)


@st.composite
def max_instances(draw, max_n=8, weight_max=40, size_max=15):
    n = draw(st.integers(1, max_n))
    weights = draw(st.lists(st.integers(1, weight_max), min_size=n, max_size=n))
    sizes = draw(st.lists(st.integers(1, size_max), min_size=n, max_size=n))
    capacity = draw(st.integers(0, sum(sizes) + 2))
    return max_knapsack(weights, sizes, capacity)


EPSILONS_MIN = (Fraction(1), Fraction(1, 2), Fraction(1, 4), Fraction(1, 10))
# epsilon = 1 is outside the admissible range for maximization (the scheme
# requires epsilon < 1 there), so the maximization sweep drops it.
EPSILONS_MAX = (Fraction(1, 2), Fraction(1, 4), Fraction(1, 10))


def random_pairs(rng: random.Random, n: int, weight_max: int, size_max: int):
    weights = [rng.randint(1, weight_max) for _ in range(n)]
    sizes = [rng.randint(1, size_max) for _ in range(n)]
    return weights, sizes


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
