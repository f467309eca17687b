"""Helpers over Python-int bitsets; bit i stands for vertex i."""
from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def neighborhood(adjacency: Sequence[int], mask: int, universe: int | None = None) -> int:
    """Open neighbourhood of *mask*, optionally clipped to *universe*."""
    out = 0
    for v in iter_bits(mask):
        out |= adjacency[v]
    out &= ~mask
    return out if universe is None else out & universe


def components(adjacency: Sequence[int], mask: int) -> list[int]:
    """Connected components of the subgraph induced by *mask*, ordered by lowest vertex."""
    found: list[int] = []
    remaining = mask
    while remaining:
        low = remaining & -remaining
        comp = low
        frontier = low
        while frontier:
            grown = 0
            for v in iter_bits(frontier):
                grown |= adjacency[v]
            grown &= remaining & ~comp
            comp |= grown
            frontier = grown
        found.append(comp)
        remaining &= ~comp
    return found


def sort_key(mask: int) -> tuple[int, ...]:
    """Lexicographic key of the sorted member tuple."""
    return tuple(iter_bits(mask))


def component_of(adjacency: Sequence[int], mask: int, start: int) -> int:
    """Component of vertex *start* in the subgraph induced by *mask* (start must lie in mask)."""
    comp = frontier = 1 << start
    while frontier:
        grown = 0
        for v in iter_bits(frontier):
            grown |= adjacency[v]
        grown &= mask & ~comp
        comp |= grown
        frontier = grown
    return comp
