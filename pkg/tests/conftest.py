import os
import random
from fractions import Fraction

import pytest

from mckay_workbench.toric import Polarization

SEED = int(os.environ.get("KHW_SEED", "20261016"))


@pytest.fixture
def rng():
    return random.Random(SEED)


def random_polarization(rng, N, max_num=8, max_den=4):
    return Polarization(tuple(Fraction(rng.randint(1, max_num), rng.randint(1, max_den)) for _ in range(N - 1)))


def random_slope(rng, max_num=9, max_den=3):
    return Fraction(rng.randint(1, max_num), rng.randint(1, max_den))
