from __future__ import annotations

from treebound.treedec.decomposition import TreeDecomposition


def simplify(decomposition: TreeDecomposition) -> TreeDecomposition:
    """Contract every tree edge whose one bag is contained in the other.

    The contained node is merged into its neighbour; surviving nodes keep
    their relative order. Bags are never enlarged, so no monotone bag
    measure increases.
    """
    bags = [bag for bag in decomposition.bags]
    neighbours: dict[int, set[int]] = {node: set() for node in range(len(bags))}
    for a, b in decomposition.edges:
        neighbours[a].add(b)
        neighbours[b].add(a)

    changed = True
    while changed:
        changed = False
        for node in sorted(neighbours):
            if node not in neighbours:
                continue
            for other in sorted(neighbours[node]):
                if bags[node] <= bags[other]:
                    _contract(neighbours, node, into=other)
                    changed = True
                    break

    survivors = sorted(neighbours)
    renumber = {old: new for new, old in enumerate(survivors)}
    edges = {
        (min(renumber[a], renumber[b]), max(renumber[a], renumber[b]))
        for a in survivors
        for b in neighbours[a]
    }
    return TreeDecomposition.build(decomposition.host, [bags[old] for old in survivors], edges)


def _contract(neighbours: dict[int, set[int]], node: int, *, into: int) -> None:
    for other in neighbours.pop(node):
        neighbours[other].discard(node)
        if other != into:
            neighbours[other].add(into)
            neighbours[into].add(other)
