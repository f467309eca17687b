"""
Runtime configuration for treebound.

Reads from environment variables with sensible defaults, layered over the
YAML profile selected by ``TREEBOUND_ENV`` (config/environments/<env>.yaml).
Precedence: environment variable > profile > built-in default.

Solver guards and cache locations live here. For fixed domain values
(exit codes, closed forms of the Burling counts) see config.constants.
"""
from __future__ import annotations

from pathlib import Path
from typing import Any

from dotenv import load_dotenv

from shared.utils.config import load_yaml, profile_section
from shared.utils.env import env_value

load_dotenv()

ROOT_DIR = Path(__file__).resolve().parents[1]


# =============================================================================
# PROFILE
# =============================================================================

ENVIRONMENT: str = env_value("TREEBOUND_ENV", "development") or "development"

_PROFILE: dict[str, Any] = load_yaml(ROOT_DIR / "config" / "environments" / f"{ENVIRONMENT}.yaml")


def _profile_value(section: str, key: str) -> Any:
    return profile_section(_PROFILE, section).get(key)


def _int_setting(env_name: str, section: str, key: str, default: int) -> int:
    raw = env_value(env_name)
    if raw is None:
        raw = _profile_value(section, key)
    return default if raw is None else int(raw)


def _path_setting(env_name: str, section: str, key: str, default: Path) -> Path:
    raw = env_value(env_name) or _profile_value(section, key)
    if not raw:
        return default
    path = Path(str(raw))
    return path if path.is_absolute() else ROOT_DIR / path


# =============================================================================
# LOGGING
# =============================================================================

# LOG_LEVEL sits beside LOG_FILE and LOG_DIR; the prefixed name is still honoured
LOG_LEVEL: str = (
    env_value("LOG_LEVEL") or env_value("TREEBOUND_LOG_LEVEL") or _profile_value("logging", "level") or "INFO"
)


# =============================================================================
# SOLVER GUARDS
# =============================================================================

# Largest graph handed to tree_parameter with the alpha / chi measures
ALPHA_CHI_GUARD: int = _int_setting("TREEBOUND_ALPHA_CHI_GUARD", "solvers", "alpha_chi_guard", 30)

# Largest graph handed to treewidth / tree_parameter with the size measure
SIZE_GUARD: int = _int_setting("TREEBOUND_SIZE_GUARD", "solvers", "size_guard", 64)

# tree-tw evaluates an exact treewidth per bag, so it shares the tighter guard
TREE_TW_GUARD: int = _int_setting("TREEBOUND_TREE_TW_GUARD", "solvers", "tree_tw_guard", 30)

BRUTE_FORCE_GUARD: int = _int_setting("TREEBOUND_BRUTE_FORCE_GUARD", "solvers", "brute_force_guard", 8)

# treewidth() re-derives its value with the elimination-ordering DP up to this size
TW_CROSS_CHECK_MAX_N: int = _int_setting(
    "TREEBOUND_TW_CROSS_CHECK_MAX_N", "solvers", "tw_cross_check_max_n", 14
)


# =============================================================================
# CONSTRUCTIONS
# =============================================================================

BURLING_N_MAX: int = _int_setting("TREEBOUND_BURLING_N_MAX", "constructions", "burling_n_max", 4)

WEIGHT_SEARCH_BUDGET_SECONDS: int = _int_setting(
    "TREEBOUND_WEIGHT_SEARCH_BUDGET_SECONDS", "constructions", "weight_search_budget_seconds", 600
)

WEIGHTS_CACHE_DIR: Path = _path_setting(
    "TREEBOUND_WEIGHTS_CACHE_DIR", "constructions", "weights_cache_dir", ROOT_DIR / "data" / "weights"
)


# =============================================================================
# VERIFY
# =============================================================================

WITNESS_DIR: Path = _path_setting(
    "TREEBOUND_WITNESS_DIR", "verify", "witness_dir", ROOT_DIR / "data" / "witnesses"
)
