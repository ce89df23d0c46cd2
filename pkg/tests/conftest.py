"""
Shared fixtures for the test suite
"""
import os
import sys

import pytest

# Add repository root to path
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config import ORACLE_BOUND_ENV  # noqa: E402


@pytest.fixture(autouse=True)
def default_oracle_bound(monkeypatch):
    """Every test starts from the built-in enumeration bound"""
    monkeypatch.delenv(ORACLE_BOUND_ENV, raising=False)


@pytest.fixture
def small_instances():
    """(k, N) pairs that enumerate in well under a second"""
    return [(1, n) for n in range(0, 8)] + [(2, n) for n in range(0, 6)] + [(3, n) for n in range(0, 5)]
