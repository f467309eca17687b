"""
Suite registry.

Suites register themselves under a name with ``@register_suite``; the suite
modules are imported by ``discover_suites`` so their decorators run.
"""
from __future__ import annotations

import logging
from collections.abc import Callable
from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field

from config.constants import DEFAULT_SEED, SUITE_ORDER
from shared.models.reports import CheckResult
from treebound.errors import InvalidParameterError

logger = logging.getLogger(__name__)


class SuiteOptions(BaseModel):
    """Knobs shared by every suite; defaults give the full-size runs."""

    model_config = ConfigDict(frozen=True)

    seed: int = DEFAULT_SEED
    max_n: int = Field(default=6, ge=3, le=6)
    samples: int = Field(default=50, ge=0)
    chi_samples: int = Field(default=30, ge=0)
    crown_max: int = Field(default=6, ge=2, le=6)
    burling_max: int = Field(default=4, ge=1, le=4)
    random_graphs: int = Field(default=200, ge=0)
    random_max_n: int = Field(default=8, ge=1, le=8)
    budget_ms: int | None = Field(default=None, ge=1)
    witness_dir: Path | None = None
    weights_cache_dir: Path | None = None


SuiteRunner = Callable[[SuiteOptions], list[CheckResult]]

SUITE_REGISTRY: dict[str, SuiteRunner] = {}


def register_suite(name: str) -> Callable[[SuiteRunner], SuiteRunner]:
    """Decorator registering a suite runner under *name*.

    Usage in suite modules:
        @register_suite("crown")
        def crown_suite(options: SuiteOptions) -> list[CheckResult]:
            ...
    """

    def decorate(runner: SuiteRunner) -> SuiteRunner:
        SUITE_REGISTRY[name] = runner
        return runner

    return decorate


def discover_suites() -> None:
    import treebound.verify.burling_checks  # noqa: F401
    import treebound.verify.completion_checks  # noqa: F401
    import treebound.verify.crown_checks  # noqa: F401
    import treebound.verify.inequalities  # noqa: F401
    import treebound.verify.refutation  # noqa: F401


def suite_names(selection: str) -> list[str]:
    discover_suites()
    if selection == "all":
        return list(SUITE_ORDER)
    if selection not in SUITE_REGISTRY:
        raise InvalidParameterError(
            f"unknown suite {selection!r}; expected one of {', '.join(SUITE_ORDER)} or 'all'"
        )
    return [selection]


def run_suites(selection: str, options: SuiteOptions | None = None) -> list[CheckResult]:
    options = options or SuiteOptions()
    results: list[CheckResult] = []
    for name in suite_names(selection):
        logger.info("suite_start suite=%s seed=%s", name, options.seed)
        results.extend(SUITE_REGISTRY[name](options))
    return results
