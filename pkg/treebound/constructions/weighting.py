"""
Integer vertex weightings whose every stable set is light.

``find_weighting`` looks for w >= 0 with total W and w(I) <= B for every
stable set I. It is a cutting-plane loop: a CP-SAT master solves
Σ w = W, w(I) <= B over the stable sets discovered so far, and the exact
weighted stable-set solver separates the next violated set, until none is
left. A disconnected graph is first tried one component at a time, largest
first, which keeps the master small on the Burling graphs.

When W is a multiple of |V| the uniform weighting is checked before any
search. Otherwise the witness is whatever the master settles on; only the
total and the stable-set bound are guaranteed, not a particular shape.

``burling_weighting`` serves the witnesses for G_k from the weight cache,
regenerating them when the cache is missing or stale.
"""
from __future__ import annotations

import logging
from pathlib import Path
from typing import Literal

from ortools.sat.python import cp_model
from pydantic import BaseModel, ConfigDict

from config import settings
from config.constants import weighting_bound, weighting_total
from treebound.constructions.burling import burling
from treebound.constructions.formats import WeightsHeader, read_weights_file, write_weights_file
from treebound.errors import (
    BudgetExceededError,
    DependencyError,
    InvalidParameterError,
    MalformedInputError,
    SolverConsistencyError,
)
from treebound.graph_core.bitset import components, iter_bits, popcount
from treebound.graph_core.graph import Graph, WeightFunction
from treebound.graph_core.operations import graph_fingerprint
from treebound.solvers.budget import Deadline
from treebound.solvers.stable_set import max_weight_stable_set_mask

logger = logging.getLogger(__name__)

SearchStatus = Literal["found", "infeasible", "budget-exceeded"]


class WeightSearchResult(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    status: SearchStatus
    bound: int
    target: int
    weights: WeightFunction | None = None
    max_stable: int | None = None
    iterations: int = 0
    cuts: int = 0

    @property
    def found(self) -> bool:
        return self.status == "found"


def verify_weighting(graph: Graph, weights: WeightFunction, bound: int, target: int) -> tuple[bool, int]:
    """(total == target and every stable set weighs <= bound, maximum stable-set weight)."""
    weights.check_for(graph)
    heaviest, _ = max_weight_stable_set_mask(graph.adjacency, graph.full_mask, weights.values)
    return weights.total == target and heaviest <= bound, heaviest


def _maximal_stable(adjacency: tuple[int, ...], support: int, start: int) -> int:
    chosen = start
    free = support
    for v in iter_bits(chosen):
        free &= ~(adjacency[v] | (1 << v))
    while free:
        v = min(iter_bits(free), key=lambda u: ((adjacency[u] & free).bit_count(), u))
        chosen |= 1 << v
        free &= ~(adjacency[v] | (1 << v))
    return chosen


def _search(
    graph: Graph,
    support: int,
    bound: int,
    target: int,
    deadline: Deadline,
    seed: int,
) -> WeightSearchResult:
    adjacency = graph.adjacency
    vertices = list(iter_bits(support))
    cuts: set[int] = {_maximal_stable(adjacency, support, 1 << v) for v in vertices}

    model = cp_model.CpModel()
    weight_vars = {v: model.new_int_var(0, bound, f"w_{v}") for v in vertices}
    model.add(sum(weight_vars.values()) == target)
    for cut in sorted(cuts):
        model.add(sum(weight_vars[v] for v in iter_bits(cut)) <= bound)

    iterations = 0

    def stopped(status: SearchStatus) -> WeightSearchResult:
        return WeightSearchResult(status=status, bound=bound, target=target, iterations=iterations, cuts=len(cuts))

    while True:
        iterations += 1
        remaining = deadline.remaining()
        if remaining is not None and remaining <= 0:
            return stopped("budget-exceeded")

        solver = cp_model.CpSolver()
        solver.parameters.num_workers = 1
        solver.parameters.random_seed = seed
        if remaining is not None:
            solver.parameters.max_time_in_seconds = remaining
        status = solver.solve(model)
        if status == cp_model.INFEASIBLE:
            logger.debug(
                "weight_search_infeasible support=%s iterations=%s cuts=%s", len(vertices), iterations, len(cuts)
            )
            return stopped("infeasible")
        if status not in (cp_model.OPTIMAL, cp_model.FEASIBLE):
            return stopped("budget-exceeded")

        values = [0] * graph.n
        for v, var in weight_vars.items():
            values[v] = solver.value(var)

        try:
            heaviest, stable = max_weight_stable_set_mask(adjacency, support, values, deadline)
        except BudgetExceededError:
            return stopped("budget-exceeded")
        logger.debug(
            "weight_search_iteration iteration=%s cuts=%s violation=%s",
            iterations, len(cuts), max(0, heaviest - bound),
        )
        if heaviest <= bound:
            return WeightSearchResult(
                status="found",
                bound=bound,
                target=target,
                weights=WeightFunction(tuple(values)),
                max_stable=heaviest,
                iterations=iterations,
                cuts=len(cuts),
            )

        cut = _maximal_stable(adjacency, support, stable)
        if cut in cuts:
            raise SolverConsistencyError("separated stable set is already a cut")
        cuts.add(cut)
        model.add(sum(weight_vars[v] for v in iter_bits(cut)) <= bound)


def find_weighting(
    graph: Graph,
    bound: int,
    target: int,
    *,
    budget_seconds: float | None = None,
    seed: int = 0,
) -> WeightSearchResult:
    if bound < 1 or target < 1:
        raise InvalidParameterError(f"bound and target must be >= 1, got B={bound}, W={target}")
    if budget_seconds is None:
        budget_seconds = settings.WEIGHT_SEARCH_BUDGET_SECONDS
    deadline = Deadline(budget_seconds)
    if graph.n == 0:
        return WeightSearchResult(status="infeasible", bound=bound, target=target)

    if target % graph.n == 0:
        uniform = WeightFunction((target // graph.n,) * graph.n)
        ok, heaviest = verify_weighting(graph, uniform, bound, target)
        if ok:
            found = WeightSearchResult(
                status="found", bound=bound, target=target, weights=uniform, max_stable=heaviest
            )
            return _checked(graph, found, 0)

    parts = components(graph.adjacency, graph.full_mask)
    attempts = sorted(parts, key=lambda comp: (-popcount(comp), comp)) if len(parts) > 1 else []
    iterations = 0
    for comp in attempts:
        result = _search(graph, comp, bound, target, deadline, seed)
        iterations += result.iterations
        if result.status != "infeasible":
            return _checked(graph, result, iterations)
        logger.debug("weight_search_component_infeasible size=%s", popcount(comp))

    result = _search(graph, graph.full_mask, bound, target, deadline, seed)
    return _checked(graph, result, iterations + result.iterations)


def _checked(graph: Graph, result: WeightSearchResult, iterations: int) -> WeightSearchResult:
    result = result.model_copy(update={"iterations": iterations})
    if result.weights is not None:
        ok, heaviest = verify_weighting(graph, result.weights, result.bound, result.target)
        if not ok:
            raise SolverConsistencyError(f"weighting failed re-verification (heaviest stable set {heaviest})")
    logger.info(
        "weight_search_done n=%s bound=%s target=%s status=%s iterations=%s",
        graph.n, result.bound, result.target, result.status, iterations,
    )
    return result


# ----------------------------------------------------------------------
# Burling witnesses and their cache
# ----------------------------------------------------------------------


def weights_cache_path(k: int, cache_dir: str | Path | None = None) -> Path:
    return Path(cache_dir if cache_dir is not None else settings.WEIGHTS_CACHE_DIR) / f"burling_k{k}.txt"


def _load_cached(path: Path, graph: Graph, bound: int, target: int) -> WeightFunction | None:
    if not path.exists():
        return None
    try:
        weights, header = read_weights_file(path, graph.n)
    except MalformedInputError as exc:
        logger.warning("weights_cache_unreadable path=%s error=%s", path, exc)
        return None
    if header != WeightsHeader(bound=bound, target=target, graph_hash=graph_fingerprint(graph)):
        logger.warning("weights_cache_stale path=%s", path)
        return None
    ok, heaviest = verify_weighting(graph, weights, bound, target)
    if not ok:
        logger.warning("weights_cache_rejected path=%s total=%s heaviest=%s", path, weights.total, heaviest)
        return None
    return weights


def burling_weighting(
    k: int,
    cache_dir: str | Path | None = None,
    *,
    allow_search: bool = True,
    budget_seconds: float | None = None,
) -> WeightFunction:
    """Verified w_k on G_k: total weighting_total(k), every stable set at most weighting_bound(k)."""
    graph = burling(k).graph
    bound, target = weighting_bound(k), weighting_total(k)
    path = weights_cache_path(k, cache_dir)

    cached = _load_cached(path, graph, bound, target)
    if cached is not None:
        logger.debug("weights_cache_hit k=%s path=%s", k, path)
        return cached
    if not allow_search:
        raise DependencyError(f"no verified weighting for G_{k} at {path}")

    result = find_weighting(graph, bound, target, budget_seconds=budget_seconds)
    if result.weights is None:
        raise DependencyError(f"weight search for G_{k} ended with status {result.status}")
    write_weights_file(
        path, result.weights, WeightsHeader(bound=bound, target=target, graph_hash=graph_fingerprint(graph))
    )
    logger.info("weights_cache_written k=%s path=%s", k, path)
    return result.weights
