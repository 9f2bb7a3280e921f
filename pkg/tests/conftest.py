import numpy as np
import pytest

from glaisher_lab.quad import QuadConfig


@pytest.fixture
def cfg():
    return QuadConfig()


@pytest.fixture
def sample_ts():
    return np.random.default_rng(7).uniform(0.01, 0.99, 100)
