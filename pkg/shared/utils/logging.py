import logging
import logging.handlers
from pathlib import Path

from shared.utils.env import env_flag, env_value

_ROOT_DIR = Path(__file__).resolve().parents[2]
_DEFAULT_LOG_DIR = _ROOT_DIR / "data" / "logs"


def resolve_level(level: int | str) -> int:
    if isinstance(level, int):
        return level
    value = logging.getLevelName(str(level).upper())
    if not isinstance(value, int):
        raise ValueError(f"unknown log level: {level}")
    return value


def setup_logging(level: int | str = logging.INFO) -> None:
    """Configure logging to stderr + optional rotating file."""
    log_format = "%(asctime)s %(levelname)s [%(name)s] %(message)s"

    root = logging.getLogger()
    root.setLevel(resolve_level(level))

    # Avoid adding duplicate handlers on repeated calls
    if root.handlers:
        return

    # stderr; stdout carries values and JSON lines
    console = logging.StreamHandler()
    console.setFormatter(logging.Formatter(log_format))
    root.addHandler(console)

    # file (opt-in via LOG_FILE=true)
    if env_flag("LOG_FILE"):
        log_dir = Path(env_value("LOG_DIR", str(_DEFAULT_LOG_DIR)) or str(_DEFAULT_LOG_DIR))
        if not log_dir.is_absolute():
            log_dir = _ROOT_DIR / log_dir
        log_dir.mkdir(parents=True, exist_ok=True)

        log_path = log_dir / "treebound.log"
        file_handler = logging.handlers.RotatingFileHandler(
            log_path, maxBytes=20 * 1024 * 1024, backupCount=3,
        )
        file_handler.setFormatter(logging.Formatter(log_format))
        root.addHandler(file_handler)


