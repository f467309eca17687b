"""
Brute-force tree-p(G) on tiny graphs, independent of the separator machinery.

Every elimination ordering of V(G) yields a chordal supergraph (its fill-in),
and every minimal triangulation arises this way, so minimising over the
distinct fill-ins of all n! orderings minimises over all chordal supergraphs.
Each supergraph is checked chordal and its maximal cliques are arranged in a
clique tree (maximum-weight spanning tree of the clique intersection graph)
with networkx.
"""
from __future__ import annotations

import logging
from functools import lru_cache

import networkx as nx

from config import settings
from treebound.errors import SolverConsistencyError
from treebound.graph_core.bitset import iter_bits, mask_of
from treebound.graph_core.graph import Graph
from treebound.solvers.budget import enforce_guard
from treebound.solvers.measures import BagEvaluator
from treebound.solvers.models import TREE_PARAMETER_OF, ParameterValue
from treebound.treedec.decomposition import TreeDecomposition
from treebound.treedec.measures import BagMeasure

logger = logging.getLogger(__name__)


@lru_cache(maxsize=64)
def chordal_fill_ins(graph: Graph) -> tuple[tuple[int, ...], ...]:
    """Adjacency rows of every distinct elimination fill-in of *graph*."""
    found: set[tuple[int, ...]] = set()

    def eliminate(remaining: int, rows: tuple[int, ...]) -> None:
        if not remaining:
            found.add(rows)
            return
        for v in iter_bits(remaining):
            later = rows[v] & remaining & ~(1 << v)
            updated = list(rows)
            for u in iter_bits(later):
                updated[u] |= later & ~(1 << u)
            eliminate(remaining & ~(1 << v), tuple(updated))

    eliminate(graph.full_mask, graph.adjacency)
    return tuple(sorted(found))


def minimal_fill_ins(graph: Graph) -> list[tuple[int, ...]]:
    """Fill-ins whose edge sets are inclusion-minimal: the minimal triangulations."""
    fills = chordal_fill_ins(graph)
    minimal = []
    for rows in fills:
        if not any(other != rows and all(o & ~r == 0 for o, r in zip(other, rows)) for other in fills):
            minimal.append(rows)
    return minimal


def _clique_tree(cliques: list[frozenset[int]]) -> list[tuple[int, int]]:
    weighted = nx.Graph()
    weighted.add_nodes_from(range(len(cliques)))
    for i in range(len(cliques)):
        for j in range(i + 1, len(cliques)):
            weighted.add_edge(i, j, weight=len(cliques[i] & cliques[j]))
    tree = nx.maximum_spanning_tree(weighted, algorithm="kruskal")
    return [(min(a, b), max(a, b)) for a, b in tree.edges]


def brute_force_tree_parameter(
    graph: Graph,
    measure: BagMeasure | str,
    *,
    guard: int | None = None,
) -> ParameterValue:
    measure = BagMeasure(measure)
    enforce_guard(graph.n, guard if guard is not None else settings.BRUTE_FORCE_GUARD, "brute_force_tree_parameter")
    name = TREE_PARAMETER_OF[measure]
    if graph.n == 0:
        return ParameterValue(name=name, value=0, witness=TreeDecomposition.build(graph, [[]]))

    evaluate = BagEvaluator(graph, measure)
    best_value: int | None = None
    best_cliques: list[frozenset[int]] = []
    for rows in chordal_fill_ins(graph):
        supergraph = Graph(graph.labels, rows).to_networkx()
        if not nx.is_chordal(supergraph):
            raise SolverConsistencyError("elimination fill-in is not chordal")
        cliques = sorted(
            (frozenset(clique) for clique in nx.chordal_graph_cliques(supergraph)),
            key=lambda clique: tuple(sorted(clique)),
        )
        value = max(evaluate(mask_of(clique)) for clique in cliques)
        if best_value is None or value < best_value:
            best_value, best_cliques = value, cliques

    witness = TreeDecomposition.build(graph, best_cliques, _clique_tree(best_cliques))
    logger.debug("brute_force_tree_parameter measure=%s n=%s value=%s", measure.value, graph.n, best_value)
    return ParameterValue(name=name, value=best_value, witness=witness)
