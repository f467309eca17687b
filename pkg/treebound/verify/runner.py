"""
Check execution, witness files and the JSON-lines report.

A check body returns an ``Outcome``; ``run_check`` times it, turns budget
errors into ``budget-exceeded`` and any other treebound error into ``fail``,
and writes the witness graph and decompositions when the check fails (or
always, for refuting instances).

Bodies call ``register_instance`` as soon as their graph exists, so a fail
raised half-way through solving still leaves the instance on disk.
"""
from __future__ import annotations

import logging
import re
import time
from collections.abc import Callable, Iterable
from contextvars import ContextVar
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from config import settings
from shared.models.reports import CheckResult
from shared.utils.atomic import write_text_atomic
from treebound.errors import BudgetExceededError, TreeboundError
from treebound.graph_core.formats import write_graph_file
from treebound.graph_core.graph import Graph
from treebound.treedec.decomposition import TreeDecomposition
from treebound.treedec.formats import write_decomposition_file

logger = logging.getLogger(__name__)


@dataclass
class Outcome:
    ok: bool
    values: dict[str, Any]
    graph: Graph | None = None
    decompositions: dict[str, TreeDecomposition] = field(default_factory=dict)
    keep_witness: bool = False


@dataclass
class _Instance:
    graph: Graph | None = None
    decompositions: dict[str, TreeDecomposition] = field(default_factory=dict)


_CURRENT: ContextVar[_Instance | None] = ContextVar("treebound_check_instance", default=None)


def register_instance(graph: Graph, decompositions: dict[str, TreeDecomposition] | None = None) -> None:
    """Record the graph the running check works on; a no-op outside ``run_check``."""
    current = _CURRENT.get()
    if current is None:
        return
    current.graph = graph
    current.decompositions.update(decompositions or {})


def register_decomposition(name: str, decomposition: TreeDecomposition) -> None:
    current = _CURRENT.get()
    if current is not None:
        current.decompositions[name] = decomposition


def witness_stem(check_id: str) -> str:
    return re.sub(r"[^A-Za-z0-9_.-]+", "_", check_id.replace("/", "__"))


def write_witness(
    directory: Path,
    check_id: str,
    graph: Graph,
    decompositions: dict[str, TreeDecomposition] | None = None,
) -> list[str]:
    stem = witness_stem(check_id)
    paths = [write_graph_file(directory / f"{stem}.gr", graph)]
    for name, decomposition in sorted((decompositions or {}).items()):
        paths.append(write_decomposition_file(directory / f"{stem}.{name}.td", decomposition))
    return [str(path) for path in paths]


def run_check(
    check_id: str,
    body: Callable[[], Outcome],
    *,
    witness_dir: Path | None = None,
) -> CheckResult:
    started = time.perf_counter()
    directory = witness_dir if witness_dir is not None else settings.WITNESS_DIR
    witness_paths: list[str] = []
    instance = _Instance()
    token = _CURRENT.set(instance)
    try:
        outcome = body()
        status = "pass" if outcome.ok else "fail"
        values = outcome.values
        graph = outcome.graph if outcome.graph is not None else instance.graph
        if graph is not None and (not outcome.ok or outcome.keep_witness):
            decompositions = {**instance.decompositions, **outcome.decompositions}
            witness_paths = write_witness(directory, check_id, graph, decompositions)
    except BudgetExceededError as exc:
        status, values = "budget-exceeded", {"error": str(exc), "limit": exc.limit}
    except TreeboundError as exc:
        status, values = "fail", {"error": f"{type(exc).__name__}: {exc}"}
        if instance.graph is not None:
            witness_paths = write_witness(directory, check_id, instance.graph, instance.decompositions)
    finally:
        _CURRENT.reset(token)
    ms = round((time.perf_counter() - started) * 1000.0, 3)

    result = CheckResult(id=check_id, status=status, values=values, witness_paths=witness_paths, ms=ms)
    log = logger.info if result.passed else logger.warning
    log("check_done id=%s status=%s ms=%s", check_id, status, ms)
    return result


def render_report(results: Iterable[CheckResult], *, deterministic: bool = False) -> str:
    lines = []
    for result in results:
        if deterministic:
            result = result.model_copy(update={"ms": 0.0})
        lines.append(result.to_json_line())
    return "".join(lines)


def write_report(path: str | Path, results: Iterable[CheckResult], *, deterministic: bool = False) -> Path:
    return write_text_atomic(path, render_report(results, deterministic=deterministic))
