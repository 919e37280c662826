"""Shared fixtures for pqfib tests."""

import pytest

from pqfib import logger as run_logger
from pqfib.pq_arithmetic import PQParams


@pytest.fixture(autouse=True, scope="session")
def no_run_log():
    """Keep the JSON lines audit trail out of the working tree."""
    run_logger._logger = run_logger.RunLogger(enabled=False)
    yield
    run_logger.reset_logger()


@pytest.fixture
def params23():
    return PQParams(2, 3)


@pytest.fixture
def square_params():
    return PQParams(4, 9)
