import math

import numpy as np
import pytest

from hardysums import arith


def naive_hardy_S(d, c):
    """Literal alternating floor sum, independent of the package paths."""
    return sum((-1) ** (k + 1 + (d * k) // c) for k in range(1, c))


def naive_hardy_S4(d, c):
    return sum((-1) ** ((d * k) // c) for k in range(1, c))


def brute_phi_theta(c):
    return sum(1 for d in range(1, c) if math.gcd(d, c) == 1 and (c + d) % 2 == 1)


@pytest.fixture(scope="session")
def tables():
    return arith.build_sieves(10_000)


@pytest.fixture()
def rng():
    return np.random.default_rng(20240817)
