from __future__ import annotations

from treebound.graph_core.graph import Graph
from treebound.graph_core.operations import induced_subgraph_mask
from treebound.solvers.budget import UNLIMITED, Deadline
from treebound.solvers.coloring import chromatic_number
from treebound.solvers.stable_set import max_weight_stable_set_mask
from treebound.treedec.measures import BagMeasure


class BagEvaluator:
    """p(G[X]) for bags X of one graph, memoised by vertex bitset."""

    def __init__(self, graph: Graph, measure: BagMeasure, deadline: Deadline = UNLIMITED) -> None:
        self.graph = graph
        self.measure = BagMeasure(measure)
        self.deadline = deadline
        self._unit = [1] * graph.n
        self._memo: dict[int, int] = {}

    def __call__(self, mask: int) -> int:
        cached = self._memo.get(mask)
        if cached is None:
            cached = self._memo[mask] = self._evaluate(mask)
        return cached

    def _evaluate(self, mask: int) -> int:
        if self.measure is BagMeasure.SIZE:
            return mask.bit_count()
        if self.measure is BagMeasure.ALPHA:
            value, _ = max_weight_stable_set_mask(self.graph.adjacency, mask, self._unit, self.deadline)
            return value
        sub = induced_subgraph_mask(self.graph, mask)
        if self.measure is BagMeasure.CHI:
            return chromatic_number(sub, deadline=self.deadline).value
        from treebound.solvers.tree_parameter import treewidth

        return treewidth(sub, deadline=self.deadline).value

    @property
    def evaluations(self) -> int:
        return len(self._memo)
