"""
Exact tree-p(G) for monotone bag measures, and treewidth.

For a monotone measure some optimal decomposition is the clique tree of a
minimal triangulation, so its bags are potential maximal cliques. The
dynamic program runs over blocks (S, C), C a full component with
N(C) = S:

    f(C) = min over PMCs S ⊊ Ω ⊆ S ∪ C of
           max(p(G[Ω]), max over components D of G[C - Ω] of f(D))

The top level is the block (∅, V) of each connected component. Ties keep
the lexicographically smallest PMC.
"""
from __future__ import annotations

import logging
from collections.abc import Sequence

from config import settings
from treebound.errors import SolverConsistencyError
from treebound.graph_core.bitset import component_of, components, iter_bits, neighborhood
from treebound.graph_core.graph import Graph
from treebound.solvers.budget import UNLIMITED, Deadline, enforce_guard
from treebound.solvers.measures import BagEvaluator
from treebound.solvers.models import TREE_PARAMETER_OF, ParameterName, ParameterValue
from treebound.solvers.separators import component_catalog
from treebound.treedec.decomposition import TreeDecomposition
from treebound.treedec.measures import BagMeasure
from treebound.treedec.simplify import simplify

logger = logging.getLogger(__name__)

_GUARD_SETTING = {
    BagMeasure.SIZE: "SIZE_GUARD",
    BagMeasure.ALPHA: "ALPHA_CHI_GUARD",
    BagMeasure.CHI: "ALPHA_CHI_GUARD",
    BagMeasure.TW: "TREE_TW_GUARD",
}

_UNSOLVED = 1 << 62


class _BlockProgram:
    def __init__(
        self,
        adjacency: Sequence[int],
        component: int,
        evaluate: BagEvaluator,
        deadline: Deadline,
    ) -> None:
        self.adjacency = adjacency
        self.component = component
        self.evaluate = evaluate
        self.deadline = deadline
        self.pmcs = component_catalog(adjacency, component, deadline).pmc_masks
        self.memo: dict[int, tuple[int, int]] = {}

    def block(self, comp: int) -> int:
        known = self.memo.get(comp)
        if known is not None:
            return known[0]
        self.deadline.check("tree_parameter")
        adjacency = self.adjacency
        sep = neighborhood(adjacency, comp, self.component)
        span = sep | comp
        best, choice = _UNSOLVED, 0
        for omega in self.pmcs:
            if omega & ~span or omega & sep != sep or omega == sep:
                continue
            value = self.evaluate(omega)
            if value >= best:
                continue
            for child in components(adjacency, comp & ~omega):
                value = max(value, self.block(child))
                if value >= best:
                    break
            if value < best:
                best, choice = value, omega
        if not choice:
            raise SolverConsistencyError(f"no potential maximal clique realises block of size {comp.bit_count()}")
        self.memo[comp] = (best, choice)
        return best

    def decomposition(self) -> tuple[list[int], list[tuple[int, int]]]:
        """Bags (bitsets) and tree edges rebuilt from the memo; node 0 is the root."""
        bags: list[int] = []
        edges: list[tuple[int, int]] = []
        stack: list[tuple[int, int]] = [(self.component, -1)]
        while stack:
            comp, parent = stack.pop()
            omega = self.memo[comp][1]
            node = len(bags)
            bags.append(omega)
            if parent >= 0:
                edges.append((parent, node))
            children = components(self.adjacency, comp & ~omega)
            for child in reversed(children):
                stack.append((child, node))
        return bags, edges


def _guard_for(measure: BagMeasure) -> int:
    return int(getattr(settings, _GUARD_SETTING[measure]))


def tree_parameter(
    graph: Graph,
    measure: BagMeasure | str,
    *,
    guard: int | None = None,
    deadline: Deadline = UNLIMITED,
) -> ParameterValue:
    measure = BagMeasure(measure)
    limit = guard if guard is not None else _guard_for(measure)
    enforce_guard(graph.n, limit, f"tree_parameter({measure.value})")
    evaluate = BagEvaluator(graph, measure, deadline)

    if graph.n == 0:
        empty = TreeDecomposition.build(graph, [[]])
        return ParameterValue(name=TREE_PARAMETER_OF[measure], value=0, witness=empty)

    value = 0
    bags: list[int] = []
    edges: list[tuple[int, int]] = []
    roots: list[int] = []
    for comp in components(graph.adjacency, graph.full_mask):
        program = _BlockProgram(graph.adjacency, comp, evaluate, deadline)
        value = max(value, program.block(comp))
        part_bags, part_edges = program.decomposition()
        offset = len(bags)
        roots.append(offset)
        bags.extend(part_bags)
        edges.extend((a + offset, b + offset) for a, b in part_edges)
    edges.extend(zip(roots, roots[1:]))

    witness = simplify(TreeDecomposition.build(graph, [list(iter_bits(bag)) for bag in bags], edges))
    logger.debug(
        "tree_parameter measure=%s n=%s value=%s bag_evaluations=%s",
        measure.value, graph.n, value, evaluate.evaluations,
    )
    return ParameterValue(name=TREE_PARAMETER_OF[measure], value=value, witness=witness)


def treewidth_by_elimination(graph: Graph) -> int:
    """Subset DP over elimination orderings.

    TW(S) = min over v in S of max(TW(S - v), |Q(S - v, v)|), where Q(S, v) is the
    set of vertices outside S + v reachable from v through S.
    """
    n = graph.n
    if n == 0:
        return -1
    adjacency = graph.adjacency
    table = [0] * (1 << n)
    table[0] = -1
    for subset in range(1, 1 << n):
        best = n
        rest = subset
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            before = subset ^ low
            prior = table[before]
            if prior >= best:
                continue
            own = component_of(adjacency, subset, v)
            q = neighborhood(adjacency, own).bit_count()
            best = min(best, max(prior, q))
        table[subset] = best
    return table[(1 << n) - 1]


def treewidth(
    graph: Graph,
    *,
    guard: int | None = None,
    deadline: Deadline = UNLIMITED,
) -> ParameterValue:
    limit = guard if guard is not None else settings.SIZE_GUARD
    result = tree_parameter(graph, BagMeasure.SIZE, guard=limit, deadline=deadline)
    width = result.value - 1
    if 0 < graph.n <= settings.TW_CROSS_CHECK_MAX_N:
        by_elimination = treewidth_by_elimination(graph)
        if by_elimination != width:
            raise SolverConsistencyError(
                f"treewidth mismatch: block DP gives {width}, elimination DP gives {by_elimination}"
            )
    return ParameterValue(name=ParameterName.TW, value=width, witness=result.witness)
