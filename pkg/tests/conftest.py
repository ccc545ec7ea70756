"""Shared fixtures and a deterministic hypothesis profile."""

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "suite",
    max_examples=80,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def oracle_rows_2k():
    """Independent 160-bit rows for n = 1..2000."""
    import oracle
    return oracle.rows(2000)


@pytest.fixture(scope="session")
def oracle_rows_1e4():
    """Independent 160-bit rows for n = 1..10000 (used by slower checks)."""
    import oracle
    return oracle.rows(10_000)
