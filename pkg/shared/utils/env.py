"""Environment lookups that treat placeholder values as unset."""
from __future__ import annotations

import os

UNSET_SENTINELS = frozenset({"", "none", "null", "n/a", "na", "undefined", "not_available"})

_TRUE = frozenset({"1", "true", "yes", "on"})
_FALSE = frozenset({"0", "false", "no", "off", "disabled"})


def env_value(name: str, default: str | None = None) -> str | None:
    raw = os.getenv(name)
    if raw is None:
        return default
    value = raw.strip()
    return default if value.lower() in UNSET_SENTINELS else value


def env_flag(name: str, default: bool | None = False) -> bool | None:
    """True/False for the usual spellings; *default* when unset or unrecognised."""
    value = (env_value(name) or "").lower()
    if value in _TRUE:
        return True
    if value in _FALSE:
        return False
    return default
