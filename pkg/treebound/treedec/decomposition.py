"""The tree-decomposition value type. Node ids are dense integers 0..N-1."""
from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from functools import cached_property

from treebound.graph_core.bitset import mask_of
from treebound.graph_core.graph import Graph, VertexSet


@dataclass(frozen=True)
class TreeDecomposition:
    host: Graph
    bags: tuple[VertexSet, ...]
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def build(
        cls,
        host: Graph,
        bags: Iterable[Iterable[int]],
        edges: Iterable[tuple[int, int]] = (),
    ) -> "TreeDecomposition":
        """Normalise bags to frozensets and edges to sorted (a, b) pairs with a < b."""
        normal_edges = sorted((min(a, b), max(a, b)) for a, b in edges)
        return cls(host, tuple(frozenset(bag) for bag in bags), tuple(normal_edges))

    @classmethod
    def single_bag(cls, host: Graph) -> "TreeDecomposition":
        return cls.build(host, [host.vertices()])

    @property
    def num_nodes(self) -> int:
        return len(self.bags)

    @cached_property
    def bag_masks(self) -> tuple[int, ...]:
        return tuple(mask_of(bag) for bag in self.bags)

    @cached_property
    def tree_adjacency(self) -> tuple[tuple[int, ...], ...]:
        neighbours: list[list[int]] = [[] for _ in self.bags]
        for a, b in self.edges:
            if 0 <= a < len(neighbours) and 0 <= b < len(neighbours) and a != b:
                neighbours[a].append(b)
                neighbours[b].append(a)
        return tuple(tuple(sorted(row)) for row in neighbours)

    @property
    def max_bag_size(self) -> int:
        return max((len(bag) for bag in self.bags), default=0)

    @property
    def width(self) -> int:
        return self.max_bag_size - 1

    def trace(self, v: int) -> tuple[int, ...]:
        """Nodes whose bag contains host vertex *v*."""
        return tuple(t for t, mask in enumerate(self.bag_masks) if mask >> v & 1)

    def __repr__(self) -> str:
        return f"TreeDecomposition(nodes={self.num_nodes}, max_bag={self.max_bag_size}, host={self.host!r})"
