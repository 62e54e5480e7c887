import pytest


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    """Keep the on-disk Kostka cache out of the user's home directory."""
    monkeypatch.setenv("EXCHSTAT_CACHE_DIR", str(tmp_path / "cache"))
    return tmp_path / "cache"
