import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from bandsmp import catalog


@pytest.fixture(scope="session")
def s9():
    return catalog("S9")


@pytest.fixture(scope="session")
def s10():
    return catalog("S10")
