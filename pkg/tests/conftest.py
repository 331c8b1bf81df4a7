"""Shared fixtures for the test suite."""

from collections.abc import Iterator

import pytest

from src.config import get_settings
from src.models.graph import Graph
from src.services.builders import complete_bipartite, cycle, paw, path


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch: pytest.MonkeyPatch) -> Iterator[None]:
    """Isolate every test from METRIC_DIM_* variables and the settings cache."""
    for name in ("NAIVE_CAP", "PRUNED_CAP", "CANONICAL_CAP", "ENUMERATE_CAP", "VERIFY_MAX_N",
                 "JOBS", "OUTPUT_FORMAT", "QUIET", "LOG_LEVEL"):
        monkeypatch.delenv(f"METRIC_DIM_{name}", raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def c5() -> Graph:
    return cycle(5)


@pytest.fixture
def p4() -> Graph:
    return path(4)


@pytest.fixture
def k23() -> Graph:
    return complete_bipartite(2, 3)


@pytest.fixture
def paw_graph() -> Graph:
    return paw()
