from __future__ import annotations

import logging

from treebound.errors import PreconditionError
from treebound.graph_core.graph import Homomorphism
from treebound.treedec.decomposition import TreeDecomposition
from treebound.treedec.validation import validate

logger = logging.getLogger(__name__)


def pullback(decomposition: TreeDecomposition, hom: Homomorphism) -> TreeDecomposition:
    """Decomposition of ``hom.source`` with bag X'_t = hom^-1(X_t) on the same tree.

    Chromatic number cannot grow at any node: a proper colouring of H[X_t]
    composed with the map colours G[X'_t].
    """
    if hom.target is not decomposition.host and hom.target != decomposition.host:
        raise PreconditionError("homomorphism target is not the host of the decomposition")
    broken = hom.violations()
    if broken:
        u, v = broken[0]
        raise PreconditionError(
            f"map is not a homomorphism: edge {hom.source.labels[u]}-{hom.source.labels[v]} "
            f"maps to a non-edge ({len(broken)} violations)"
        )
    report = validate(decomposition)
    if not report.is_valid:
        raise PreconditionError(f"decomposition is invalid: {report.violations[0].detail}")

    fibres: list[list[int]] = [[] for _ in range(hom.target.n)]
    for v, image in enumerate(hom.mapping):
        fibres[image].append(v)
    bags = [[v for image in sorted(bag) for v in fibres[image]] for bag in decomposition.bags]
    pulled = TreeDecomposition.build(hom.source, bags, decomposition.edges)

    result = validate(pulled)
    if not result.is_valid:
        raise PreconditionError(f"pullback is invalid: {result.violations[0].detail}")
    logger.debug("pullback nodes=%s source_n=%s", pulled.num_nodes, hom.source.n)
    return pulled
