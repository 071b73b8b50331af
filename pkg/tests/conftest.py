import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from syslab import eplane


@pytest.fixture(scope="session")
def window8():
    return eplane.window((0, 0), 8)


@pytest.fixture(scope="session")
def window12():
    return eplane.window((0, 0), 12)


@pytest.fixture(scope="session")
def window42():
    """Window holding the worked (0,0) -> (4,2) instance with room to spare."""
    return eplane.window((2, 1), 12)
