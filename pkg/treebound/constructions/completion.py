"""
1-completions C(H) and their decompositions.

C(H) keeps H on vertices 0..n-1 and appends one vertex a_uv per
non-adjacent pair u < v of H (lexicographic pair order), adjacent to
exactly u and v, labelled "a(<label u>,<label v>)".
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property

from treebound.errors import DomainError, PreconditionError
from treebound.graph_core.builders import complete, empty
from treebound.graph_core.graph import Graph, VertexSet
from treebound.graph_core.operations import is_stable_set
from treebound.solvers.stable_set import max_stable_set
from treebound.treedec.decomposition import TreeDecomposition
from treebound.treedec.validation import validate

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CompletionResult:
    base: Graph
    graph: Graph
    pairs: tuple[tuple[int, int], ...]

    @cached_property
    def added(self) -> dict[tuple[int, int], int]:
        """Non-adjacent pair (u, v), u < v, of the base graph -> its vertex a_uv in C(H)."""
        return {pair: self.base.n + k for k, pair in enumerate(self.pairs)}

    def added_vertex(self, u: int, v: int) -> int:
        return self.added[(min(u, v), max(u, v))]


def one_completion(base: Graph) -> CompletionResult:
    n = base.n
    pairs = tuple(
        (u, v) for u in range(n) for v in range(u + 1, n) if not base.has_edge(u, v)
    )
    labels = list(base.labels)
    rows = list(base.adjacency) + [0] * len(pairs)
    for k, (u, v) in enumerate(pairs):
        a = n + k
        labels.append(f"a({base.labels[u]},{base.labels[v]})")
        rows[a] = (1 << u) | (1 << v)
        rows[u] |= 1 << a
        rows[v] |= 1 << a
    graph = Graph(tuple(labels), tuple(rows))
    logger.debug("one_completion base_n=%s added=%s", n, len(pairs))
    return CompletionResult(base=base, graph=graph, pairs=pairs)


def completion_star_decomposition(base: Graph, completion: CompletionResult | None = None) -> TreeDecomposition:
    """Star K_{1,m}: node 0 holds V(H), node k+1 holds {u, v, a_uv} for the k-th pair."""
    if base.n < 3:
        raise DomainError(f"star decomposition needs |V(H)| >= 3, got {base.n}")
    completion = completion or one_completion(base)
    bags: list[list[int]] = [list(base.vertices())]
    edges: list[tuple[int, int]] = []
    for k, (u, v) in enumerate(completion.pairs):
        bags.append([u, v, completion.added_vertex(u, v)])
        edges.append((0, k + 1))
    return TreeDecomposition.build(completion.graph, bags, edges)


def completion_lift_decomposition(
    base: Graph,
    decomposition: TreeDecomposition,
    completion: CompletionResult | None = None,
) -> TreeDecomposition:
    """Lift a decomposition of H to C(H).

    A pair whose ends share a bag gets a new leaf {u, v, a_uv} hung on the first
    such node (id order); otherwise a_uv joins every original bag. Original
    nodes keep their ids, new leaves follow in pair order.
    """
    if base.num_edges == 0:
        raise DomainError("lifting needs a graph with at least one edge")
    if decomposition.host != base:
        raise PreconditionError("decomposition is not over the given graph")
    report = validate(decomposition)
    if not report.is_valid:
        raise PreconditionError(f"decomposition is invalid: {report.violations[0].detail}")
    completion = completion or one_completion(base)

    masks = decomposition.bag_masks
    bags = [set(bag) for bag in decomposition.bags]
    edges = list(decomposition.edges)
    everywhere: list[int] = []
    for u, v in completion.pairs:
        a = completion.added_vertex(u, v)
        both = (1 << u) | (1 << v)
        host = next((t for t, mask in enumerate(masks) if mask & both == both), None)
        if host is None:
            everywhere.append(a)
        else:
            edges.append((host, len(bags)))
            bags.append({u, v, a})
    for t in range(decomposition.num_nodes):
        bags[t].update(everywhere)
    logger.debug(
        "completion_lift nodes=%s leaves=%s spread=%s",
        decomposition.num_nodes, len(bags) - decomposition.num_nodes, len(everywhere),
    )
    return TreeDecomposition.build(completion.graph, bags, edges)


def crown_decomposition(n: int) -> TreeDecomposition:
    """Decomposition of C(K̄_n) whose bags have independence number n - 1.

    Node 0: (A - a_0) ∪ N(a_0); node 1: {a_0} ∪ N(a_0); then one node
    {a_i, a_j, a_ij} per pair 1 <= i < j <= n-1, all attached to node 0.
    """
    if n < 3:
        raise DomainError(f"crown decomposition needs n >= 3, got {n}")
    completion = one_completion(empty(n))
    around_first = [completion.added_vertex(0, j) for j in range(1, n)]
    bags: list[list[int]] = [list(range(1, n)) + around_first, [0] + around_first]
    for i in range(1, n):
        for j in range(i + 1, n):
            bags.append([i, j, completion.added_vertex(i, j)])
    edges = [(0, node) for node in range(1, len(bags))]
    return TreeDecomposition.build(completion.graph, bags, edges)


def complete_minor_model(completion: CompletionResult) -> tuple[list[VertexSet], Graph]:
    """Branch sets of a K_n minor of C(H): vertex v with every a_uv, u < v.

    Returns the branch sets and the target K_n.
    """
    n = completion.base.n
    branches: list[set[int]] = [{v} for v in range(n)]
    for u, v in completion.pairs:
        branches[v].add(completion.added_vertex(u, v))
    return [frozenset(branch) for branch in branches], complete(n) if n else Graph((), ())


def induced_crown_embedding(completion: CompletionResult, stable: VertexSet | None = None) -> VertexSet:
    """Vertices of C(H) inducing C(K̄_k): a stable set I of H (maximum if omitted) and all a_uv, u, v in I."""
    members = sorted(stable if stable is not None else max_stable_set(completion.base).witness)
    if not is_stable_set(completion.base, members):
        raise PreconditionError("embedding needs a stable set of the base graph")
    chosen = set(members)
    for i, u in enumerate(members):
        for v in members[i + 1:]:
            chosen.add(completion.added_vertex(u, v))
    return frozenset(chosen)
