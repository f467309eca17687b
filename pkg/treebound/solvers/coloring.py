"""
Exact chromatic and clique numbers.

chi is solved per connected component: trivial and bipartite components are
settled directly (networkx two-colouring); the rest go through a DSATUR
branch-and-bound whose first levels are fixed by a greedy maximal clique
(lower bound) and whose initial incumbent is the greedy DSATUR colouring.
"""
from __future__ import annotations

import logging
from collections.abc import Sequence

import networkx as nx

from treebound.graph_core.bitset import components, iter_bits
from treebound.graph_core.graph import Graph
from treebound.graph_core.operations import complement, induced_subgraph_mask
from treebound.solvers.budget import UNLIMITED, Deadline
from treebound.solvers.models import ParameterName, ParameterValue
from treebound.solvers.stable_set import max_weight_stable_set_mask

logger = logging.getLogger(__name__)

_CHECK_EVERY = 2048


def is_proper_coloring(graph: Graph, colors: Sequence[int]) -> bool:
    if len(colors) != graph.n:
        return False
    return all(colors[u] != colors[v] for u, v in graph.edges())


def _greedy_clique(adjacency: Sequence[int], mask: int) -> list[int]:
    clique: list[int] = []
    cand = mask
    while cand:
        v = max(iter_bits(cand), key=lambda u: ((adjacency[u] & cand).bit_count(), -u))
        clique.append(v)
        cand &= adjacency[v]
    return clique


class _ColoringSearch:
    def __init__(self, adjacency: Sequence[int], vertices: list[int], deadline: Deadline) -> None:
        self.adjacency = adjacency
        self.vertices = vertices
        self._members = set(vertices)
        self.deadline = deadline
        self.color: dict[int, int] = {}
        self.best_k = len(vertices) + 1
        self.best: dict[int, int] = {}
        self.lower = 1
        self.nodes = 0

    def _saturation(self, v: int) -> tuple[int, int]:
        used = 0
        free_degree = 0
        for u in iter_bits(self.adjacency[v]):
            c = self.color.get(u)
            if c is None:
                free_degree += 1 if u in self._members else 0
            else:
                used |= 1 << c
        return used, free_degree

    def greedy(self) -> None:
        self.color = {}
        used_colors = 0
        for _ in self.vertices:
            v, forbidden = self._pick()
            c = 0
            while forbidden >> c & 1:
                c += 1
            self.color[v] = c
            used_colors = max(used_colors, c + 1)
        self.best_k = used_colors
        self.best = dict(self.color)
        self.color = {}

    def _pick(self) -> tuple[int, int]:
        best_v, best_key, best_forbidden = -1, None, 0
        for v in self.vertices:
            if v in self.color:
                continue
            forbidden, free_degree = self._saturation(v)
            key = (forbidden.bit_count(), free_degree, -v)
            if best_key is None or key > best_key:
                best_v, best_key, best_forbidden = v, key, forbidden
        return best_v, best_forbidden

    def solve(self, clique: list[int]) -> None:
        self.lower = len(clique)
        self.greedy()
        if self.best_k == self.lower:
            return
        self.color = {v: i for i, v in enumerate(clique)}
        self._branch(len(clique), len(clique))

    def _branch(self, colored: int, used: int) -> None:
        """Depth-first over colour choices with an explicit frame stack.

        A frame is ``[vertex, forbidden colours, colours in use, next colour]``;
        colour ``used`` opens a new class and is tried last.
        """
        base = colored
        frames: list[list[int]] = []
        descend = True
        while True:
            if descend:
                descend = False
                self.nodes += 1
                if self.nodes % _CHECK_EVERY == 0:
                    self.deadline.check("chromatic_number")
                if used < self.best_k:
                    if colored == len(self.vertices):
                        self.best_k = used
                        self.best = dict(self.color)
                    else:
                        v, forbidden = self._pick()
                        frames.append([v, forbidden, used, 0])
            if not frames or self.best_k == self.lower:
                return
            frame = frames[-1]
            v, forbidden, frame_used, c = frame
            self.color.pop(v, None)
            while c < frame_used and forbidden >> c & 1:
                c += 1
            if c < frame_used or (c == frame_used and frame_used + 1 < self.best_k):
                frame[3] = c + 1
                self.color[v] = c
                colored = base + len(frames)
                used = frame_used + 1 if c == frame_used else frame_used
                descend = True
                continue
            frames.pop()


def _color_component(graph: Graph, comp: int, deadline: Deadline) -> dict[int, int]:
    members = list(iter_bits(comp))
    if len(members) == 1:
        return {members[0]: 0}
    sub = induced_subgraph_mask(graph, comp)
    nx_graph = sub.to_networkx()
    if nx.is_bipartite(nx_graph):
        sides = nx.bipartite.color(nx_graph)
        return {members[local]: side for local, side in sides.items()}
    search = _ColoringSearch(graph.adjacency, members, deadline)
    search.solve(_greedy_clique(graph.adjacency, comp))
    return search.best


def chromatic_number(graph: Graph, *, deadline: Deadline = UNLIMITED) -> ParameterValue:
    colors = [0] * graph.n
    value = 0
    for comp in components(graph.adjacency, graph.full_mask):
        coloring = _color_component(graph, comp, deadline)
        for v, c in coloring.items():
            colors[v] = c
        value = max(value, max(coloring.values()) + 1)
    logger.debug("chromatic_number n=%s value=%s", graph.n, value)
    return ParameterValue(name=ParameterName.CHI, value=value, witness=tuple(colors))


def clique_number(graph: Graph, *, deadline: Deadline = UNLIMITED) -> ParameterValue:
    """omega(G) as a maximum stable set of the complement."""
    co = complement(graph)
    value, chosen = max_weight_stable_set_mask(co.adjacency, co.full_mask, [1] * graph.n, deadline)
    return ParameterValue(name=ParameterName.OMEGA, value=value, witness=frozenset(iter_bits(chosen)))
