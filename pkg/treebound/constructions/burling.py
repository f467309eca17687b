"""
The Burling sequence (G_n, S_n) and its star-forest tree-decompositions.

G_1 = K_1, S_1 = {V(G_1)}. Level n is built from level n-1 with s = |S_{n-1}|:

    base      a copy of G_{n-1}, vertices 0..v-1
    block j   for the j-th member S of S_{n-1}: a copy G_S of G_{n-1}
              followed by one apex v_{S,Q} per member Q of the copy's family,
              adjacent to exactly Q

S_n lists, for each j and each i, S ∪ Q and S ∪ {v_{S,Q}} (Q the i-th member
of the copied family).

Labels are path addresses from the root "r": the base copy prefixes "r/b",
block j prefixes "r/s<j>", and apexes are "r/s<j>/v<i>".

The decomposition follows the level structure: the base tree; for each j a
copy of the previous tree whose bags are extended by S, with its root
(copy of node 0) attached to the first base node containing S; and below
the copy node containing Q a leaf {v_{S,Q}} ∪ Q ∪ S. S must be in that leaf,
since S ∪ {v_{S,Q}} is a family member that has to lie in some bag.
"""
from __future__ import annotations

import logging
from collections.abc import Iterator
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

from config import settings
from config.constants import BURLING_ROOT_LABEL
from treebound.errors import DomainError
from treebound.graph_core.graph import Graph, VertexSet
from treebound.graph_core.operations import is_stable_set
from treebound.treedec.decomposition import TreeDecomposition

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VertexOrigin:
    kind: Literal["root", "base", "copy", "apex"]
    set_index: int | None = None
    member_index: int | None = None


@dataclass(frozen=True)
class StableSetFamily:
    graph: Graph
    members: tuple[VertexSet, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[VertexSet]:
        return iter(self.members)

    def __getitem__(self, index: int) -> VertexSet:
        return self.members[index]

    def all_stable(self) -> bool:
        return all(is_stable_set(self.graph, member) for member in self.members)


@dataclass(frozen=True)
class BurlingLevel:
    n: int
    graph: Graph
    family: StableSetFamily
    provenance: tuple[VertexOrigin, ...]


@dataclass(frozen=True)
class _Level:
    labels: tuple[str, ...]
    rows: tuple[int, ...]
    family: tuple[frozenset[int], ...]
    provenance: tuple[VertexOrigin, ...]
    bags: tuple[frozenset[int], ...]
    tree_edges: tuple[tuple[int, int], ...]
    member_nodes: tuple[int, ...]


def _nest(label: str, segment: str) -> str:
    return f"{BURLING_ROOT_LABEL}/{segment}{label[len(BURLING_ROOT_LABEL):]}"


def _first_level() -> _Level:
    only = frozenset({0})
    return _Level(
        labels=(BURLING_ROOT_LABEL,),
        rows=(0,),
        family=(only,),
        provenance=(VertexOrigin("root"),),
        bags=(only,),
        tree_edges=(),
        member_nodes=(0,),
    )


def _next_level(prev: _Level) -> _Level:
    v, s, t = len(prev.labels), len(prev.family), len(prev.bags)

    labels = [_nest(label, "b") for label in prev.labels]
    rows = list(prev.rows)
    provenance = [VertexOrigin("base") for _ in range(v)]
    family: list[frozenset[int]] = []
    bags = list(prev.bags)
    tree_edges = list(prev.tree_edges)
    member_nodes: list[int] = []

    for j, chosen in enumerate(prev.family):
        start = len(labels)
        apex0 = start + v
        labels.extend(_nest(label, f"s{j}") for label in prev.labels)
        rows.extend(row << start for row in prev.rows)
        provenance.extend(VertexOrigin("copy", j) for _ in range(v))
        for i, member in enumerate(prev.family):
            apex = apex0 + i
            copied = frozenset(start + q for q in member)
            labels.append(f"{BURLING_ROOT_LABEL}/s{j}/v{i}")
            provenance.append(VertexOrigin("apex", j, i))
            rows.append(0)
            for q in copied:
                rows[apex] |= 1 << q
                rows[q] |= 1 << apex

        node0 = len(bags)
        leaf0 = node0 + t
        bags.extend(frozenset(start + x for x in bag) | chosen for bag in prev.bags)
        tree_edges.extend((node0 + a, node0 + b) for a, b in prev.tree_edges)
        tree_edges.append((prev.member_nodes[j], node0))
        for i, member in enumerate(prev.family):
            copied = frozenset(start + q for q in member)
            bags.append(copied | {apex0 + i} | chosen)
            tree_edges.append((node0 + prev.member_nodes[i], leaf0 + i))
            family.append(chosen | copied)
            member_nodes.append(node0 + prev.member_nodes[i])
            family.append(chosen | {apex0 + i})
            member_nodes.append(leaf0 + i)

    return _Level(
        labels=tuple(labels),
        rows=tuple(rows),
        family=tuple(family),
        provenance=tuple(provenance),
        bags=tuple(bags),
        tree_edges=tuple(tree_edges),
        member_nodes=tuple(member_nodes),
    )


@lru_cache(maxsize=None)
def _level(n: int) -> _Level:
    if n == 1:
        return _first_level()
    built = _next_level(_level(n - 1))
    logger.debug(
        "burling_level n=%s vertices=%s family=%s nodes=%s",
        n, len(built.labels), len(built.family), len(built.bags),
    )
    return built


def _check_level(n: int) -> None:
    if not isinstance(n, int) or not 1 <= n <= settings.BURLING_N_MAX:
        raise DomainError(f"Burling level must lie in 1..{settings.BURLING_N_MAX}, got {n!r}")


@lru_cache(maxsize=None)
def _burling(n: int) -> BurlingLevel:
    level = _level(n)
    graph = Graph(level.labels, level.rows)
    return BurlingLevel(
        n=n,
        graph=graph,
        family=StableSetFamily(graph, level.family),
        provenance=level.provenance,
    )


def burling(n: int) -> BurlingLevel:
    _check_level(n)
    return _burling(n)


def burling_star_forest_decomposition(n: int) -> TreeDecomposition:
    _check_level(n)
    level = _level(n)
    return TreeDecomposition.build(_burling(n).graph, level.bags, level.tree_edges)


def burling_member_nodes(n: int) -> tuple[int, ...]:
    """Node of the star-forest decomposition holding each family member, in family order."""
    _check_level(n)
    return _level(n).member_nodes


def burling_vertex_count(n: int) -> int:
    v, s = 1, 1
    for _ in range(n - 1):
        v, s = v + s * v + s * s, 2 * s * s
    return v


def burling_family_size(n: int) -> int:
    s = 1
    for _ in range(n - 1):
        s = 2 * s * s
    return s
