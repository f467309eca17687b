"""Deterministic builders for the elementary graphs (K_n, K̄_n, C_n, P_n, unions, G(n, p))."""
from __future__ import annotations

import logging
from collections.abc import Sequence
from typing import Any

import networkx as nx

from treebound.errors import InvalidParameterError
from treebound.graph_core.graph import Graph

logger = logging.getLogger(__name__)


def _labels(n: int) -> tuple[str, ...]:
    return tuple(str(i) for i in range(n))


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise InvalidParameterError(message)


def complete(n: int) -> Graph:
    _require(isinstance(n, int) and n >= 1, f"complete graph needs n >= 1, got {n!r}")
    full = (1 << n) - 1
    return Graph(_labels(n), tuple(full & ~(1 << v) for v in range(n)))


def empty(n: int) -> Graph:
    _require(isinstance(n, int) and n >= 1, f"edgeless graph needs n >= 1, got {n!r}")
    return Graph(_labels(n), (0,) * n)


def cycle(n: int) -> Graph:
    _require(isinstance(n, int) and n >= 3, f"cycle needs n >= 3, got {n!r}")
    return Graph.from_edges(n, ((v, (v + 1) % n) for v in range(n)))


def path(n: int) -> Graph:
    _require(isinstance(n, int) and n >= 1, f"path needs n >= 1, got {n!r}")
    return Graph.from_edges(n, ((v, v + 1) for v in range(n - 1)))


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    """Copies in order; copy i relabels vertex L as "i:L"."""
    _require(len(graphs) > 0, "disjoint union needs at least one graph")
    labels: list[str] = []
    rows: list[int] = []
    offset = 0
    for i, graph in enumerate(graphs):
        labels.extend(f"{i}:{label}" for label in graph.labels)
        rows.extend(row << offset for row in graph.adjacency)
        offset += graph.n
    return Graph(tuple(labels), tuple(rows))


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdős–Rényi G(n, p) with an explicit seed; labels "0".."n-1"."""
    _require(isinstance(n, int) and n >= 1, f"random graph needs n >= 1, got {n!r}")
    _require(0.0 <= p <= 1.0, f"edge probability must lie in [0, 1], got {p!r}")
    sample = nx.gnp_random_graph(n, p, seed=seed)
    return Graph.from_edges(n, sample.edges)


_BUILDERS = {
    "complete": complete,
    "empty": empty,
    "cycle": cycle,
    "path": path,
}


def build(kind: str, params: dict[str, Any] | Sequence[Graph] | int) -> Graph:
    """Dispatch by name: complete/empty/cycle/path take ``n``; disjoint_union takes a list."""
    if kind == "disjoint_union":
        graphs = params.get("graphs") if isinstance(params, dict) else params
        return disjoint_union(list(graphs or []))
    builder = _BUILDERS.get(kind)
    if builder is None:
        raise InvalidParameterError(f"unknown graph kind {kind!r}")
    n = params.get("n") if isinstance(params, dict) else params
    graph = builder(n)
    logger.debug("graph_built kind=%s n=%s m=%s", kind, graph.n, graph.num_edges)
    return graph
