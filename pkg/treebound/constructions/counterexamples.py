"""
Graphs on which tw + 1 exceeds tree-α · tree-χ.

    pentagon(k)            C(k·C_5): the 1-completion of k disjoint 5-cycles
    burling_completion(k)  C(H_k), H_k the blowup of G_k by its weighting w_k
"""
from __future__ import annotations

import logging
from enum import Enum
from pathlib import Path

from treebound.constructions.burling import burling
from treebound.constructions.completion import CompletionResult, one_completion
from treebound.constructions.weighting import burling_weighting
from treebound.errors import InvalidParameterError
from treebound.graph_core.builders import cycle, disjoint_union
from treebound.graph_core.graph import Graph, Homomorphism
from treebound.graph_core.operations import blowup

logger = logging.getLogger(__name__)


class CounterexampleKind(str, Enum):
    PENTAGON = "pentagon"
    BURLING_COMPLETION = "burling_completion"


def blowup_burling(
    k: int,
    cache_dir: str | Path | None = None,
    *,
    allow_search: bool = True,
) -> tuple[Graph, Homomorphism]:
    """H_k and its projection onto G_k."""
    level = burling(k)
    weights = burling_weighting(k, cache_dir, allow_search=allow_search)
    blown, projection = blowup(level.graph, weights)
    logger.debug("blowup_burling k=%s vertices=%s edges=%s", k, blown.n, blown.num_edges)
    return blown, projection


def pentagons(k: int) -> Graph:
    if k < 1:
        raise InvalidParameterError(f"number of pentagons must be >= 1, got {k}")
    return cycle(5) if k == 1 else disjoint_union([cycle(5)] * k)


def counterexample_completion(
    kind: CounterexampleKind | str,
    k: int,
    cache_dir: str | Path | None = None,
) -> CompletionResult:
    kind = CounterexampleKind(kind)
    if k < 1:
        raise InvalidParameterError(f"k must be >= 1, got {k}")
    if kind is CounterexampleKind.PENTAGON:
        base = pentagons(k)
    else:
        base, _ = blowup_burling(k, cache_dir)
    return one_completion(base)


def counterexample(kind: CounterexampleKind | str, k: int, cache_dir: str | Path | None = None) -> Graph:
    return counterexample_completion(kind, k, cache_dir).graph
