from __future__ import annotations

import importlib

import pytest

from config import settings
from shared.utils.logging import resolve_level


@pytest.fixture
def reload_settings(monkeypatch):
    yield lambda: importlib.reload(settings)
    monkeypatch.undo()
    importlib.reload(settings)


def test_environment_variables_override_the_profile(monkeypatch, reload_settings) -> None:
    monkeypatch.setenv("TREEBOUND_BURLING_N_MAX", "3")
    monkeypatch.setenv("TREEBOUND_WEIGHTS_CACHE_DIR", "elsewhere/weights")

    reloaded = reload_settings()

    assert reloaded.BURLING_N_MAX == 3
    assert reloaded.WEIGHTS_CACHE_DIR == reloaded.ROOT_DIR / "elsewhere" / "weights"


def test_unset_sentinels_fall_back_to_the_profile(monkeypatch, reload_settings) -> None:
    monkeypatch.setenv("TREEBOUND_ENV", "ci")
    monkeypatch.delenv("LOG_LEVEL", raising=False)
    monkeypatch.setenv("TREEBOUND_LOG_LEVEL", "none")

    reloaded = reload_settings()

    assert reloaded.LOG_LEVEL == "WARNING"
    assert reloaded.TW_CROSS_CHECK_MAX_N == 12
    assert reloaded.WITNESS_DIR == reloaded.ROOT_DIR / "data" / "witnesses" / "ci"


def test_log_level_reads_the_unprefixed_name_first(monkeypatch, reload_settings) -> None:
    monkeypatch.setenv("LOG_LEVEL", "DEBUG")
    monkeypatch.setenv("TREEBOUND_LOG_LEVEL", "ERROR")
    assert reload_settings().LOG_LEVEL == "DEBUG"

    monkeypatch.delenv("LOG_LEVEL")
    assert reload_settings().LOG_LEVEL == "ERROR"


def test_log_levels_resolve() -> None:
    assert resolve_level("debug") == 10
    with pytest.raises(ValueError):
        resolve_level("chatty")
