import pytest

from matroid_csm.config import get_settings
from matroid_csm.services.catalog import fano, graphic_complete, non_fano
from matroid_csm.services.matroid import Matroid


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Every test sees default settings unless it sets MATROID_CSM_* itself."""
    for name in ("SEED_T", "GENERIC_RETRIES", "MAX_WORKERS", "DEFAULT_MAX_SIZE", "LOG_LEVEL", "DEBUG"):
        monkeypatch.delenv(f"MATROID_CSM_{name}", raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def u24() -> Matroid:
    return Matroid.uniform(2, 4)


@pytest.fixture
def u34() -> Matroid:
    return Matroid.uniform(3, 4)


@pytest.fixture
def k4() -> Matroid:
    return graphic_complete(4)


@pytest.fixture
def fano_plane() -> Matroid:
    return fano()


@pytest.fixture
def non_fano_plane() -> Matroid:
    return non_fano()


@pytest.fixture
def with_loop() -> Matroid:
    """U_{2,3} plus a loop as element 3."""
    return Matroid.from_bases(4, [[0, 1], [0, 2], [1, 2]])
