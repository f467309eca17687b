"""
Exact maximum (weighted) stable set.

Branch-and-bound over bitsets: each connected component is solved on its
own; inside a component, isolated and weight-dominating vertices are taken
greedily and the remaining candidates are bounded by a greedy clique cover
(the sum over cover cliques of their heaviest vertex).
"""
from __future__ import annotations

import logging
from collections.abc import Sequence

from treebound.graph_core.bitset import components, iter_bits
from treebound.graph_core.graph import Graph, WeightFunction
from treebound.solvers.budget import UNLIMITED, Deadline
from treebound.solvers.models import ParameterName, ParameterValue

logger = logging.getLogger(__name__)

_CHECK_EVERY = 4096


class _StableSetSearch:
    def __init__(self, adjacency: Sequence[int], weights: Sequence[int], deadline: Deadline) -> None:
        self.adjacency = adjacency
        self.weights = weights
        self.deadline = deadline
        self.best_value = -1
        self.best_set = 0
        self.nodes = 0

    def _weight(self, mask: int) -> int:
        weights = self.weights
        return sum(weights[v] for v in iter_bits(mask))

    def _cover_bound(self, cand: int) -> int:
        adjacency, weights = self.adjacency, self.weights
        order = sorted(iter_bits(cand), key=lambda v: (-weights[v], v))
        rest = cand
        total = 0
        for v in order:
            if not rest >> v & 1:
                continue
            clique = 1 << v
            common = adjacency[v] & rest
            for u in order:
                if common >> u & 1:
                    clique |= 1 << u
                    common &= adjacency[u]
            # v is the heaviest member: cover vertices come in weight order
            total += weights[v]
            rest &= ~clique
        return total

    def run(self, cand: int, value: int, chosen: int) -> None:
        """Depth-first search; pending subproblems live on an explicit stack."""
        stack = [(cand, value, chosen)]
        while stack:
            self._expand(*stack.pop(), stack)

    def _expand(self, cand: int, value: int, chosen: int, stack: list[tuple[int, int, int]]) -> None:
        self.nodes += 1
        if self.nodes % _CHECK_EVERY == 0:
            self.deadline.check("max_stable_set")
        adjacency, weights = self.adjacency, self.weights

        progress = True
        while progress and cand:
            progress = False
            for v in iter_bits(cand):
                if not cand >> v & 1:
                    continue
                nb = adjacency[v] & cand
                if not nb or weights[v] >= self._weight(nb):
                    value += weights[v]
                    chosen |= 1 << v
                    cand &= ~(nb | (1 << v))
                    progress = True

        if not cand:
            if value > self.best_value:
                self.best_value, self.best_set = value, chosen
            return
        if value + self._cover_bound(cand) <= self.best_value:
            return

        pivot = max(iter_bits(cand), key=lambda v: ((adjacency[v] & cand).bit_count(), -v))
        # taking the pivot is explored first
        stack.append((cand & ~(1 << pivot), value, chosen))
        stack.append((cand & ~(adjacency[pivot] | (1 << pivot)), value + weights[pivot], chosen | (1 << pivot)))


def max_weight_stable_set_mask(
    adjacency: Sequence[int],
    mask: int,
    weights: Sequence[int],
    deadline: Deadline = UNLIMITED,
) -> tuple[int, int]:
    """(weight, bitset) of a maximum-weight stable set inside *mask*."""
    total, chosen = 0, 0
    for comp in components(adjacency, mask):
        search = _StableSetSearch(adjacency, weights, deadline)
        search.run(comp, 0, 0)
        total += search.best_value
        chosen |= search.best_set
    return total, chosen


def max_stable_set(
    graph: Graph,
    weights: WeightFunction | None = None,
    *,
    deadline: Deadline = UNLIMITED,
) -> ParameterValue:
    if weights is None:
        values: Sequence[int] = [1] * graph.n
    else:
        weights.check_for(graph)
        values = weights.values
    value, chosen = max_weight_stable_set_mask(graph.adjacency, graph.full_mask, values, deadline)
    logger.debug("max_stable_set n=%s weighted=%s value=%s", graph.n, weights is not None, value)
    return ParameterValue(name=ParameterName.ALPHA, value=value, witness=frozenset(iter_bits(chosen)))
