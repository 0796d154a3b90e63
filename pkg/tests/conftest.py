import numpy as np
import pytest

from csym.electron import build_gamma4
from csym.photon import build_gamma8


@pytest.fixture(scope="session")
def gamma8():
    return build_gamma8()


@pytest.fixture(scope="session")
def gamma4():
    return build_gamma4()


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
