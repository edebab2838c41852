import cmath

import pytest


@pytest.fixture
def zeta48():
    return lambda k: cmath.exp(2j * cmath.pi * k / 48)
