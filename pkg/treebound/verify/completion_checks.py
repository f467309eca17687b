"""
1-completion checks on named and seeded random base graphs H.

tw-alpha:  tw(C(H)) = |V(H)| - 1 and α(H) - 1 <= tree-α(C(H)) <= α(H), with the
           star decomposition, the K_n minor model and the induced crown as
           certificates.
tree-chi:  tree-χ(C(H)) = tree-χ(H), with the lifted decomposition as
           certificate.
"""
from __future__ import annotations

import logging
from pathlib import Path

import networkx as nx

from shared.models.reports import CheckResult
from treebound.constructions.completion import (
    complete_minor_model,
    completion_lift_decomposition,
    completion_star_decomposition,
    induced_crown_embedding,
    one_completion,
)
from treebound.graph_core.builders import complete, cycle, empty
from treebound.graph_core.graph import Graph
from treebound.graph_core.operations import induced_subgraph
from treebound.solvers.budget import Deadline
from treebound.solvers.stable_set import max_stable_set
from treebound.solvers.tree_parameter import tree_parameter, treewidth
from treebound.treedec.certificates import is_minor_model
from treebound.treedec.measures import BagMeasure
from treebound.treedec.parameters import bag_parameter
from treebound.treedec.validation import validate
from treebound.verify.registry import SuiteOptions, register_suite
from treebound.verify.runner import Outcome, register_instance, run_check
from treebound.verify.sampling import random_samples

logger = logging.getLogger(__name__)


def tw_alpha_outcome(base: Graph, deadline: Deadline, expected: dict[str, int] | None = None) -> Outcome:
    completion = one_completion(base)
    graph = completion.graph
    register_instance(graph)
    n = base.n
    alpha = max_stable_set(base, deadline=deadline).value
    tw = treewidth(graph, deadline=deadline).value
    tree_alpha = tree_parameter(graph, BagMeasure.ALPHA, deadline=deadline)

    star = completion_star_decomposition(base, completion)
    star_valid = validate(star).is_valid
    star_alpha = bag_parameter(star, BagMeasure.ALPHA, deadline=deadline).value if star_valid else None
    star_expected = max(alpha, 2) if completion.pairs else alpha

    branches, target = complete_minor_model(completion)
    minor_ok = is_minor_model(graph, branches, target)

    crown = induced_crown_embedding(completion)
    crown_ok = nx.is_isomorphic(
        induced_subgraph(graph, crown).to_networkx(), one_completion(empty(alpha)).graph.to_networkx()
    )

    values = {
        "n": n,
        "alpha": alpha,
        "tw": tw,
        "tree_alpha": tree_alpha.value,
        "star_width": star.width,
        "star_alpha": star_alpha,
        "minor_model": minor_ok,
        "crown_embedding": crown_ok,
    }
    ok = (
        tw == n - 1
        and alpha - 1 <= tree_alpha.value <= alpha
        and star_valid
        and star.width == n - 1
        and star_alpha == star_expected
        and minor_ok
        and crown_ok
    )
    for key, value in (expected or {}).items():
        ok = ok and values[key] == value
    return Outcome(
        ok=ok,
        values=values,
        graph=graph,
        decompositions={"star": star, "tree-alpha": tree_alpha.witness},
    )


def tree_chi_outcome(base: Graph, deadline: Deadline, expected: int | None = None) -> Outcome:
    completion = one_completion(base)
    register_instance(completion.graph)
    base_chi = tree_parameter(base, BagMeasure.CHI, deadline=deadline)
    completed_chi = tree_parameter(completion.graph, BagMeasure.CHI, deadline=deadline)
    lifted = completion_lift_decomposition(base, base_chi.witness, completion)
    lift_valid = validate(lifted).is_valid
    lift_chi = bag_parameter(lifted, BagMeasure.CHI, deadline=deadline).value if lift_valid else None

    values = {
        "n": base.n,
        "tree_chi_base": base_chi.value,
        "tree_chi_completion": completed_chi.value,
        "lift_chi": lift_chi,
    }
    ok = (
        completed_chi.value == base_chi.value
        and lift_valid
        and lift_chi == max(2, base_chi.value)
        and (expected is None or completed_chi.value == expected)
    )
    return Outcome(ok=ok, values=values, graph=completion.graph, decompositions={"lift": lifted})


def check_completion_lemmas(
    max_n: int = 6,
    samples: int = 50,
    seed: int = 0,
    *,
    chi_samples: int = 30,
    budget_ms: int | None = None,
    witness_dir: Path | None = None,
) -> list[CheckResult]:
    def deadline() -> Deadline:
        return Deadline.from_ms(budget_ms)

    results = [
        run_check(
            "completion/tree-chi/C5",
            lambda: tree_chi_outcome(cycle(5), deadline(), expected=2),
            witness_dir=witness_dir,
        ),
        run_check(
            "completion/tw-alpha/K4",
            lambda: tw_alpha_outcome(complete(4), deadline(), expected={"tw": 3, "tree_alpha": 1, "alpha": 1}),
            witness_dir=witness_dir,
        ),
        run_check(
            "completion/tw-alpha/K4bar",
            lambda: tw_alpha_outcome(empty(4), deadline(), expected={"tree_alpha": 3, "alpha": 4}),
            witness_dir=witness_dir,
        ),
    ]

    for sample in random_samples(samples, 3, max_n, seed):
        results.append(run_check(
            f"completion/tw-alpha/sample={sample.index}",
            lambda graph=sample.graph: tw_alpha_outcome(graph, deadline()),
            witness_dir=witness_dir,
        ))
    for sample in random_samples(chi_samples, 2, max_n, seed + 1, need_edges=True):
        results.append(run_check(
            f"completion/tree-chi/sample={sample.index}",
            lambda graph=sample.graph: tree_chi_outcome(graph, deadline()),
            witness_dir=witness_dir,
        ))
    return results


@register_suite("completion")
def completion_suite(options: SuiteOptions) -> list[CheckResult]:
    return check_completion_lemmas(
        options.max_n,
        options.samples,
        options.seed,
        chi_samples=options.chi_samples,
        budget_ms=options.budget_ms,
        witness_dir=options.witness_dir,
    )
