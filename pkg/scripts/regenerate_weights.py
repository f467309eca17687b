"""
Regenerate the cached Burling weightings.

Usage:
    treebound-regen-weights
    treebound-regen-weights -k 3 -k 4 --cache-dir data/weights
    python -m scripts.regenerate_weights --force

Existing cache files that still verify are kept unless --force is given.
"""
from __future__ import annotations

import argparse
import logging
from pathlib import Path

from config import settings
from shared.utils.logging import setup_logging
from shared.utils.terminal_ui import Ansi, print_panel
from treebound.constructions.weighting import burling_weighting, weights_cache_path
from treebound.errors import DependencyError

logger = logging.getLogger("treebound.regen")


def regenerate(levels: list[int], cache_dir: Path | None, *, force: bool, budget_seconds: float | None) -> int:
    failures = 0
    rows = []
    for k in levels:
        path = weights_cache_path(k, cache_dir)
        if force:
            path.unlink(missing_ok=True)
        try:
            weights = burling_weighting(k, cache_dir, budget_seconds=budget_seconds)
        except DependencyError as exc:
            failures += 1
            rows.append((f"k={k}", f"failed: {exc}"))
            continue
        rows.append((f"k={k}", f"total {weights.total} -> {path}"))
    print_panel("Burling weightings", rows, Ansi.GREEN if not failures else Ansi.RED)
    return 1 if failures else 0


def main() -> None:
    parser = argparse.ArgumentParser(description="Regenerate the cached Burling weightings.")
    parser.add_argument("-k", type=int, action="append", dest="levels",
                        help="Level to regenerate (repeatable; default: 1..BURLING_N_MAX)")
    parser.add_argument("--cache-dir", type=Path, default=None,
                        help=f"Cache directory (default: {settings.WEIGHTS_CACHE_DIR})")
    parser.add_argument("--force", action="store_true", help="Discard existing cache files first")
    parser.add_argument("--budget-seconds", type=float, default=None,
                        help=f"Search budget per level (default: {settings.WEIGHT_SEARCH_BUDGET_SECONDS})")
    args = parser.parse_args()

    setup_logging(settings.LOG_LEVEL)
    levels = args.levels or list(range(1, settings.BURLING_N_MAX + 1))
    raise SystemExit(regenerate(levels, args.cache_dir, force=args.force, budget_seconds=args.budget_seconds))


if __name__ == "__main__":
    main()
