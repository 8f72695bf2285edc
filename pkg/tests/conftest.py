"""Shared fixtures for the test suite."""

import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture
def two_by_two():
    return np.array([[2.0, -1.0], [-1.0, 2.0]])
