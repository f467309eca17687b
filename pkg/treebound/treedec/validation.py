"""
Axiom checks for tree-decompositions.

Violations are returned as data: each names the axiom and a witness
(node pair, vertex, edge, or a vertex followed by its disconnected trace).
"""
from __future__ import annotations

from collections import deque
from typing import List, Literal

from pydantic import BaseModel, ConfigDict, Field

from treebound.graph_core.bitset import iter_bits
from treebound.treedec.decomposition import TreeDecomposition

Axiom = Literal["tree", "bag-range", "vertex-coverage", "edge-coverage", "connectivity"]


class Violation(BaseModel):
    model_config = ConfigDict(frozen=True)

    axiom: Axiom
    witness: List[int] = Field(default_factory=list)
    detail: str = ""


class ValidationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    num_nodes: int
    violations: List[Violation] = Field(default_factory=list)

    @property
    def is_valid(self) -> bool:
        return not self.violations

    def of_axiom(self, axiom: Axiom) -> list[Violation]:
        return [violation for violation in self.violations if violation.axiom == axiom]


def _tree_violations(decomposition: TreeDecomposition) -> list[Violation]:
    found: list[Violation] = []
    count = decomposition.num_nodes
    if count == 0:
        return [Violation(axiom="tree", detail="tree has no nodes")]
    seen: set[tuple[int, int]] = set()
    for a, b in decomposition.edges:
        if not (0 <= a < count and 0 <= b < count):
            found.append(Violation(axiom="tree", witness=[a, b], detail="edge endpoint is not a node"))
        elif a == b:
            found.append(Violation(axiom="tree", witness=[a, b], detail="self-loop in tree"))
        elif (a, b) in seen:
            found.append(Violation(axiom="tree", witness=[a, b], detail="parallel tree edge"))
        seen.add((a, b))
    if found:
        return found

    reached = {0}
    queue = deque([0])
    adjacency = decomposition.tree_adjacency
    while queue:
        node = queue.popleft()
        for nxt in adjacency[node]:
            if nxt not in reached:
                reached.add(nxt)
                queue.append(nxt)
    if len(reached) != count:
        missing = min(set(range(count)) - reached)
        found.append(Violation(axiom="tree", witness=[0, missing], detail="tree is disconnected"))
    elif len(decomposition.edges) != count - 1:
        detail = f"{len(decomposition.edges)} edges on {count} nodes: tree has a cycle"
        found.append(Violation(axiom="tree", detail=detail))
    return found


def _trace_is_connected(trace: int, adjacency: tuple[tuple[int, ...], ...]) -> bool:
    start = trace & -trace
    reached = start
    queue = deque([start.bit_length() - 1])
    while queue:
        node = queue.popleft()
        for nxt in adjacency[node]:
            bit = 1 << nxt
            if trace & bit and not reached & bit:
                reached |= bit
                queue.append(nxt)
    return reached == trace


def validate(decomposition: TreeDecomposition) -> ValidationReport:
    host = decomposition.host
    violations = _tree_violations(decomposition)

    traces = [0] * host.n
    for node, bag in enumerate(decomposition.bags):
        for v in sorted(bag):
            if not (isinstance(v, int) and 0 <= v < host.n):
                violations.append(
                    Violation(axiom="bag-range", witness=[node, v], detail=f"bag {node} holds unknown vertex {v}")
                )
                continue
            traces[v] |= 1 << node

    for v in host.vertices():
        if not traces[v]:
            violations.append(
                Violation(axiom="vertex-coverage", witness=[v], detail=f"vertex {host.labels[v]} is in no bag")
            )

    for u, v in host.edges():
        if traces[u] and traces[v] and not traces[u] & traces[v]:
            violations.append(
                Violation(
                    axiom="edge-coverage",
                    witness=[u, v],
                    detail=f"edge {host.labels[u]}-{host.labels[v]} lies in no bag",
                )
            )

    adjacency = decomposition.tree_adjacency
    for v in host.vertices():
        if traces[v] and not _trace_is_connected(traces[v], adjacency):
            nodes = list(iter_bits(traces[v]))
            violations.append(
                Violation(
                    axiom="connectivity",
                    witness=[v, *nodes],
                    detail=f"trace of vertex {host.labels[v]} over nodes {nodes} is disconnected",
                )
            )

    return ValidationReport(num_nodes=decomposition.num_nodes, violations=violations)
