"""
Minimal separators and potential maximal cliques.

Separators come from the closure procedure: seeds N(C) for every component
C of G - N[v], then N(C) for every component C of G - (S ∪ N(x)) with
x ∈ S, until nothing new appears.

Potential maximal cliques are built one vertex at a time along a BFS order
(G_1 ⊂ G_2 ⊂ ... ⊂ G). When vertex a is added, every PMC of G_{i+1} is one
of: a PMC of G_i, such a PMC plus a, S + a for a minimal separator S of
G_{i+1}, or S ∪ (C ∩ T) for S a minimal separator of G_{i+1}, C a
component of G_{i+1} - S and T a minimal separator of G_i. All candidates
are screened with the PMC criterion.
"""
from __future__ import annotations

import logging
from collections import deque
from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache

from treebound.graph_core.bitset import components, iter_bits, neighborhood, sort_key
from treebound.graph_core.graph import Graph, VertexSet
from treebound.solvers.budget import UNLIMITED, Deadline

logger = logging.getLogger(__name__)


def minimal_separators_mask(adjacency: Sequence[int], universe: int) -> set[int]:
    found: set[int] = set()
    queue: deque[int] = deque()

    def offer(sep: int) -> None:
        if sep not in found:
            found.add(sep)
            queue.append(sep)

    for v in iter_bits(universe):
        closed = (adjacency[v] & universe) | (1 << v)
        for comp in components(adjacency, universe & ~closed):
            offer(neighborhood(adjacency, comp, universe))
    while queue:
        sep = queue.popleft()
        for x in iter_bits(sep):
            closed = sep | (adjacency[x] & universe)
            for comp in components(adjacency, universe & ~closed):
                offer(neighborhood(adjacency, comp, universe))
    return found


def is_pmc_mask(adjacency: Sequence[int], universe: int, omega: int) -> bool:
    """No full component of G - omega, and every non-edge of omega is completed by a component."""
    if not omega or omega & ~universe:
        return False
    borders = []
    for comp in components(adjacency, universe & ~omega):
        border = neighborhood(adjacency, comp, universe)
        if border == omega:
            return False
        borders.append(border)
    for x in iter_bits(omega):
        missing = omega & ~adjacency[x] & ~((1 << (x + 1)) - 1)
        if not missing:
            continue
        covered = 0
        for border in borders:
            if border >> x & 1:
                covered |= border
        if missing & ~covered:
            return False
    return True


def bfs_order(adjacency: Sequence[int], universe: int) -> list[int]:
    order: list[int] = []
    seen = 0
    for start in iter_bits(universe):
        if seen >> start & 1:
            continue
        seen |= 1 << start
        queue = deque([start])
        while queue:
            v = queue.popleft()
            order.append(v)
            for u in iter_bits(adjacency[v] & universe & ~seen):
                seen |= 1 << u
                queue.append(u)
    return order


def potential_maximal_cliques_mask(
    adjacency: Sequence[int],
    universe: int,
    deadline: Deadline = UNLIMITED,
) -> tuple[set[int], set[int]]:
    """(PMCs, minimal separators) of the subgraph induced by *universe*."""
    order = bfs_order(adjacency, universe)
    if not order:
        return set(), set()
    current = 1 << order[0]
    pmcs = {current}
    previous_seps: set[int] = set()
    for a in order[1:]:
        deadline.check("potential_maximal_cliques")
        bit = 1 << a
        grown = current | bit
        seps = minimal_separators_mask(adjacency, grown)
        candidates: set[int] = set()
        for omega in pmcs:
            candidates.add(omega)
            candidates.add(omega | bit)
        for sep in seps:
            candidates.add(sep | bit)
            if previous_seps:
                comps = components(adjacency, grown & ~sep)
                for t in previous_seps:
                    for comp in comps:
                        candidates.add(sep | (comp & t))
        pmcs = {omega for omega in candidates if is_pmc_mask(adjacency, grown, omega)}
        current, previous_seps = grown, seps
    return pmcs, previous_seps


@dataclass(frozen=True)
class PmcCatalog:
    """Minimal separators and potential maximal cliques of a graph, as bitsets in lexicographic order."""

    separator_masks: tuple[int, ...]
    pmc_masks: tuple[int, ...]

    @property
    def separators(self) -> list[VertexSet]:
        return [frozenset(iter_bits(mask)) for mask in self.separator_masks]

    @property
    def pmcs(self) -> list[VertexSet]:
        return [frozenset(iter_bits(mask)) for mask in self.pmc_masks]


def component_catalog(adjacency: Sequence[int], universe: int, deadline: Deadline = UNLIMITED) -> PmcCatalog:
    pmcs, seps = potential_maximal_cliques_mask(adjacency, universe, deadline)
    return PmcCatalog(tuple(sorted(seps, key=sort_key)), tuple(sorted(pmcs, key=sort_key)))


@lru_cache(maxsize=128)
def pmc_catalog(graph: Graph) -> PmcCatalog:
    """Catalog of the whole graph; the empty set is a separator iff the graph is disconnected."""
    seps: set[int] = set()
    pmcs: set[int] = set()
    comps = components(graph.adjacency, graph.full_mask)
    for comp in comps:
        part = component_catalog(graph.adjacency, comp)
        seps.update(part.separator_masks)
        pmcs.update(part.pmc_masks)
    if len(comps) > 1:
        seps.add(0)
    logger.debug("pmc_catalog n=%s separators=%s pmcs=%s", graph.n, len(seps), len(pmcs))
    return PmcCatalog(tuple(sorted(seps, key=sort_key)), tuple(sorted(pmcs, key=sort_key)))
