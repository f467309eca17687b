"""Structural certificates checked on bags and on minor models."""
from __future__ import annotations

from collections.abc import Iterable, Sequence

from treebound.graph_core.bitset import components, iter_bits, neighborhood
from treebound.graph_core.graph import Graph
from treebound.treedec.decomposition import TreeDecomposition


def is_star_forest(graph: Graph, vertices: Iterable[int]) -> bool:
    """Every component of G[S] is a tree with at most one vertex of degree >= 2 (K_1 counts)."""
    mask = graph.vertex_mask(vertices)
    adjacency = graph.adjacency
    for comp in components(adjacency, mask):
        degrees = [(adjacency[v] & comp).bit_count() for v in iter_bits(comp)]
        if sum(degrees) // 2 != comp.bit_count() - 1:
            return False
        if sum(1 for degree in degrees if degree >= 2) > 1:
            return False
    return True


def family_coverage(
    decomposition: TreeDecomposition,
    family: Sequence[Iterable[int]],
) -> list[int | None]:
    """For each member, the first node (id order) whose bag contains it, else None."""
    covering: list[int | None] = []
    masks = decomposition.bag_masks
    for member in family:
        wanted = decomposition.host.vertex_mask(member)
        covering.append(next((t for t, mask in enumerate(masks) if mask & wanted == wanted), None))
    return covering


def is_minor_model(graph: Graph, branch_sets: Sequence[Iterable[int]], target: Graph) -> bool:
    """Disjoint connected branch sets, one per target vertex, with every target edge realised."""
    if len(branch_sets) != target.n:
        return False
    masks = [graph.vertex_mask(branch) for branch in branch_sets]
    seen = 0
    for mask in masks:
        if not mask or mask & seen:
            return False
        seen |= mask
        if len(components(graph.adjacency, mask)) != 1:
            return False
    return all(neighborhood(graph.adjacency, masks[i]) & masks[j] for i, j in target.edges())
