import pytest

from core.graphs import enumerate_fixed_graphs


@pytest.fixture(scope="session")
def graph_classes():
    """Enumerated classes per degree, computed once per session."""
    cache = {}

    def get(degree):
        if degree not in cache:
            cache[degree] = enumerate_fixed_graphs(degree)
        return cache[degree]

    return get


@pytest.fixture(autouse=True)
def isolated_environment(monkeypatch, tmp_path):
    for key in ("CONTACT_SEED", "CONTACT_THREADS", "CONTACT_FORMAT", "CONTACT_NO_TIMING",
                "CONTACT_MIN_AGREEMENT", "CONTACT_RETRY_BUDGET", "CONTACT_PROGRESS",
                "CONTACT_CACHE_ENABLED", "LOG_FILE", "LOG_LEVEL", "APP_ENV"):
        monkeypatch.delenv(key, raising=False)
    monkeypatch.setenv("CONTACT_CACHE_DIR", str(tmp_path / "graph_cache"))
