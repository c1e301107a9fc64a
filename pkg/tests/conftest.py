import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gapcheck.primes import build_store


@pytest.fixture(scope="session")
def small_store():
    return build_store(10 ** 5)


@pytest.fixture(scope="session")
def mid_store():
    return build_store(3 * 10 ** 6)


@pytest.fixture(scope="session")
def big_store():
    """Sieve covering the 1e8-scale acceptance criteria (squares to N = 1e4)."""
    return build_store((10 ** 4 + 1) ** 2 + 10)
