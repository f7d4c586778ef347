import math

import pytest

from coldstack import QubitTechnology

OMEGA0 = 2.0 * math.pi * 6e9


@pytest.fixture
def tech_50ms() -> QubitTechnology:
    """Main-line hardware: 6 GHz qubit with a 50 ms lifetime."""
    return QubitTechnology(omega0=OMEGA0, gamma=1.0 / 0.05)


@pytest.fixture
def tech_1ms() -> QubitTechnology:
    return QubitTechnology(omega0=OMEGA0, gamma=1.0 / 1e-3)


@pytest.fixture
def tech_3ms() -> QubitTechnology:
    return QubitTechnology(omega0=OMEGA0, gamma=1.0 / 3e-3)
