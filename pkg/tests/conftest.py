from typing import Iterator

import numpy as np
import pytest
from rsqlogic.config import DEFAULT_TOLERANCES
from rsqlogic.config import set_active_theme
from rsqlogic.config import set_active_tolerances
from rsqlogic.qlogic import ConjugatePair
from rsqlogic.theme import LightTheme


# Every test starts and ends with the default tolerances and theme
@pytest.fixture(autouse=True)
def restore_settings() -> Iterator[None]:
    set_active_tolerances(DEFAULT_TOLERANCES)
    yield
    set_active_tolerances(DEFAULT_TOLERANCES)
    set_active_theme(LightTheme())


@pytest.fixture
def zx() -> ConjugatePair:
    """Spin-1/2 pair, `φ = (↑z, ↓z)` and `χ = (↑x, ↓x)`."""
    return ConjugatePair.qubit_zx()


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(1234)
