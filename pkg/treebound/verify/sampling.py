from __future__ import annotations

import random
from collections.abc import Iterator
from dataclasses import dataclass

from config.constants import EDGE_PROBABILITIES
from treebound.graph_core.builders import random_graph
from treebound.graph_core.graph import Graph


@dataclass(frozen=True)
class Sample:
    index: int
    graph: Graph
    p: float
    seed: int


def random_samples(
    count: int,
    min_n: int,
    max_n: int,
    seed: int,
    *,
    need_edges: bool = False,
) -> Iterator[Sample]:
    """Seeded G(n, p) draws: n uniform in [min_n, max_n], p from the edge-probability menu.

    With *need_edges*, edgeless draws are skipped (the next draw takes their place).
    """
    rng = random.Random(seed)
    produced = 0
    while produced < count:
        n = rng.randint(min_n, max_n)
        p = rng.choice(EDGE_PROBABILITIES)
        graph_seed = rng.randrange(2**31)
        graph = random_graph(n, p, graph_seed)
        if need_edges and graph.num_edges == 0:
            continue
        yield Sample(index=produced, graph=graph, p=p, seed=graph_seed)
        produced += 1
