import numpy as np
import pytest
from hypothesis import settings
from matspec.matrix.family import commuting_family

settings.register_profile("matspec", deadline=None, max_examples=40)
settings.load_profile("matspec")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full catalog runs (deselect with '-m \"not slow\"')")


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture(params=[1, 2, 3])
def dim(request):
    return request.param


@pytest.fixture
def family(rng, dim):
    """ Three commuting positive stable matrices """
    return commuting_family(rng, dim, count=3)


@pytest.fixture
def commuting_pair(rng):
    fam = commuting_family(rng, 2, count=2)
    return fam.members
