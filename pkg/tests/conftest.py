"""
Shared fixtures
"""

import numpy as np
import pytest

from models.octonion import Octonion
from models.pipeline_models import SuiteConfig
from services.algebra.sampling import random_frame
from services.series.constructors import twisted_fixed_point


@pytest.fixture
def rng():
    """Seeded Philox generator"""
    return np.random.Generator(np.random.Philox(20240601))


@pytest.fixture
def frame(rng):
    return random_frame(rng)


@pytest.fixture
def worked_example():
    """phi * J with I = e1, J = e2; J is a boundary fixed point"""
    return twisted_fixed_point(Octonion.basis(1), Octonion.basis(2))


@pytest.fixture
def small_config():
    """Fast configuration for suite runs"""
    return SuiteConfig(seed=7, samples=10, suites=["algebra"])
