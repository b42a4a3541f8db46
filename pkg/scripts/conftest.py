"""
Shared fixtures for the test modules.
"""
import sys
from pathlib import Path

import pytest

# Add src to path
sys.path.append(str(Path(__file__).parent.parent))

from src.algebra.scalars import QHALF, RATIONAL, ScalarField, ScalarMode
from src.utils.sampling import make_rng

DATA_DIR = Path(__file__).parent.parent / "data"


@pytest.fixture
def rng():
    return make_rng()


@pytest.fixture
def qq():
    return RATIONAL


@pytest.fixture
def qhalf():
    return QHALF


@pytest.fixture
def cc():
    return ScalarField(ScalarMode.COMPLEX, 1e-9)


@pytest.fixture
def data_dir():
    return DATA_DIR
