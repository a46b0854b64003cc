"""
Pytest configuration and shared fixtures for flagorbit tests.
"""

import pytest
import tempfile
import shutil
from pathlib import Path

from click.testing import CliRunner

from config import DEFAULT_CONFIG
from core.bruhat import clear_order_cache
from core.coxeter import enumerate_elements
from core.rootdata import CartanDatum, build_root_system

# Test data directory
TEST_DATA_DIR = Path(__file__).parent / "fixtures"

MAX_ORDER = DEFAULT_CONFIG["max_group_order"]


def type_system(series: str, rank: int):
    return build_root_system(CartanDatum.from_series(series, rank))


@pytest.fixture
def temp_dir():
    """Create a temporary directory for test isolation."""
    temp_path = tempfile.mkdtemp()
    yield Path(temp_path)
    shutil.rmtree(temp_path)


@pytest.fixture(autouse=True)
def isolated_cache_env(monkeypatch):
    """Keep a developer's FLAGORBIT_CACHE_DIR out of the tests."""
    monkeypatch.delenv("FLAGORBIT_CACHE_DIR", raising=False)
    yield
    clear_order_cache()


@pytest.fixture(scope="session")
def a1():
    return type_system("A", 1)


@pytest.fixture(scope="session")
def a2():
    return type_system("A", 2)


@pytest.fixture(scope="session")
def a3():
    return type_system("A", 3)


@pytest.fixture(scope="session")
def a4():
    return type_system("A", 4)


@pytest.fixture(scope="session")
def b2():
    return type_system("B", 2)


@pytest.fixture(scope="session")
def a2_elements(a2):
    return enumerate_elements(a2, MAX_ORDER)


@pytest.fixture(scope="session")
def a3_elements(a3):
    return enumerate_elements(a3, MAX_ORDER)


@pytest.fixture(scope="session")
def b2_elements(b2):
    return enumerate_elements(b2, MAX_ORDER)


@pytest.fixture
def runner():
    """Click runner for end-to-end CLI tests."""
    return CliRunner()
