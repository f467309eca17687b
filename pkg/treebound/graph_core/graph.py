"""
Immutable labelled simple graphs, vertex maps and integer vertex weights.

Adjacency is a tuple of Python-int bitsets (bit u of ``adjacency[v]`` is set
iff uv is an edge), which gives O(1) edge queries and word-parallel set
intersections for the solvers.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from treebound.errors import InvalidParameterError
from treebound.graph_core.bitset import iter_bits

VertexSet = frozenset[int]


@dataclass(frozen=True)
class Graph:
    labels: tuple[str, ...]
    adjacency: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.labels)
        if len(self.adjacency) != n:
            raise InvalidParameterError(
                f"adjacency has {len(self.adjacency)} rows for {n} labels"
            )
        if len(set(self.labels)) != n:
            raise InvalidParameterError("vertex labels must be unique")
        full = (1 << n) - 1
        for v, row in enumerate(self.adjacency):
            if row < 0 or row & ~full:
                raise InvalidParameterError(f"row {v} references vertices outside 0..{n - 1}")
            if row >> v & 1:
                raise InvalidParameterError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adjacency[u] >> v & 1:
                    raise InvalidParameterError(f"adjacency is not symmetric at {v}-{u}")

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @classmethod
    def from_edges(cls, labels: Iterable[str] | int, edges: Iterable[tuple[int, int]]) -> "Graph":
        names = tuple(str(i) for i in range(labels)) if isinstance(labels, int) else tuple(labels)
        rows = [0] * len(names)
        for u, v in edges:
            if not (0 <= u < len(names) and 0 <= v < len(names)):
                raise InvalidParameterError(f"edge {u}-{v} out of range for {len(names)} vertices")
            if u == v:
                raise InvalidParameterError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(names, tuple(rows))

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Graph":
        """Nodes keep networkx iteration order; the ``label`` attribute wins over str(node)."""
        nodes = list(graph.nodes)
        index = {node: i for i, node in enumerate(nodes)}
        labels = [str(graph.nodes[node].get("label", node)) for node in nodes]
        return cls.from_edges(labels, ((index[u], index[v]) for u, v in graph.edges))

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        for v, label in enumerate(self.labels):
            graph.add_node(v, label=label)
        graph.add_edges_from(self.edges())
        return graph

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adjacency) // 2

    @cached_property
    def _index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    def vertices(self) -> range:
        return range(self.n)

    def index_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise InvalidParameterError(f"no vertex labelled {label!r}") from None

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(iter_bits(self.adjacency[v]))

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges (u, v) with u < v in lexicographic order."""
        for u, row in enumerate(self.adjacency):
            for v in iter_bits(row >> (u + 1)):
                yield u, u + 1 + v

    def vertex_mask(self, vertices: Iterable[int]) -> int:
        """Bitset of *vertices*; raises on indices out of range."""
        mask = 0
        for v in vertices:
            if not (isinstance(v, int) and 0 <= v < self.n):
                raise InvalidParameterError(f"vertex index {v!r} out of range 0..{self.n - 1}")
            mask |= 1 << v
        return mask

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"


@dataclass(frozen=True)
class Homomorphism:
    """A total vertex map ``source -> target``; edge preservation is checked by is_valid()."""

    source: Graph
    target: Graph
    mapping: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.mapping) != self.source.n:
            raise InvalidParameterError(
                f"map covers {len(self.mapping)} of {self.source.n} source vertices"
            )
        for v, image in enumerate(self.mapping):
            if not 0 <= image < self.target.n:
                raise InvalidParameterError(f"vertex {v} maps outside the target ({image})")

    @classmethod
    def identity(cls, graph: Graph) -> "Homomorphism":
        return cls(graph, graph, tuple(graph.vertices()))

    def violations(self) -> list[tuple[int, int]]:
        """Source edges whose images are not target edges."""
        return [
            (u, v)
            for u, v in self.source.edges()
            if not self.target.has_edge(self.mapping[u], self.mapping[v])
        ]

    def is_valid(self) -> bool:
        return not self.violations()

    def preimage(self, target_vertices: Iterable[int]) -> VertexSet:
        wanted = set(target_vertices)
        return frozenset(v for v, image in enumerate(self.mapping) if image in wanted)


@dataclass(frozen=True)
class WeightFunction:
    """Non-negative integer weight per vertex index."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        for v, weight in enumerate(self.values):
            if not isinstance(weight, int) or weight < 0:
                raise InvalidParameterError(f"weight of vertex {v} must be a non-negative integer")

    @classmethod
    def constant(cls, n: int, value: int = 1) -> "WeightFunction":
        return cls(tuple([value] * n))

    @classmethod
    def from_mapping(cls, n: int, weights: Mapping[int, int]) -> "WeightFunction":
        values = [0] * n
        for v, weight in weights.items():
            if not 0 <= v < n:
                raise InvalidParameterError(f"weight given for vertex {v} outside 0..{n - 1}")
            values[v] = weight
        return cls(tuple(values))

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, v: int) -> int:
        return self.values[v]

    @property
    def total(self) -> int:
        return sum(self.values)

    def of(self, vertices: Iterable[int]) -> int:
        return sum(self.values[v] for v in vertices)

    def of_mask(self, mask: int) -> int:
        return sum(self.values[v] for v in iter_bits(mask))

    def support(self) -> VertexSet:
        return frozenset(v for v, weight in enumerate(self.values) if weight > 0)

    def check_for(self, graph: Graph) -> None:
        if len(self.values) != graph.n:
            raise InvalidParameterError(
                f"weight function has {len(self.values)} entries for a graph on {graph.n} vertices"
            )
