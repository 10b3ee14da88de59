import os

import numpy as np
import pytest


@pytest.fixture
def rng():
    """Deterministic generator; override via SCHWARZIAN_LAB_SEED."""
    return np.random.default_rng(int(os.environ.get("SCHWARZIAN_LAB_SEED", "0")))
