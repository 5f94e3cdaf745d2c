import random

import pytest

from mcdm.model import Criterion, Direction, new_matrix


@pytest.fixture
def rng():
    return random.Random(20260826)


def random_matrix(rng, m=None, n=None, max_m=6, max_n=5):
    """Random nonnegative matrix with values in (0, 10] and random directions."""
    m = m or rng.randint(2, max_m)
    n = n or rng.randint(1, max_n)
    criteria = [
        Criterion(f"c{j}", rng.choice([Direction.BENEFIT, Direction.COST]))
        for j in range(n)
    ]
    values = [[rng.uniform(1e-6, 10.0) for _ in range(n)] for _ in range(m)]
    return new_matrix([f"a{i}" for i in range(m)], criteria, values)
