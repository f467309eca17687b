"""YAML profile loading for config.settings."""
from __future__ import annotations

from pathlib import Path
from typing import Any

import yaml


def load_yaml(path: str | Path) -> dict[str, Any]:
    """Mapping stored at *path*; a missing or empty file reads as ``{}``."""
    path = Path(path)
    if not path.exists():
        return {}
    data = yaml.safe_load(path.read_text(encoding="utf-8")) or {}
    if not isinstance(data, dict):
        raise ValueError(f"profile {path} must hold a mapping, got {type(data).__name__}")
    return data


def profile_section(profile: dict[str, Any], section: str) -> dict[str, Any]:
    block = profile.get(section) or {}
    return block if isinstance(block, dict) else {}
