"""
Subcommand handlers. Each takes a validated ``CommandConfig`` and returns an
exit code; errors propagate to ``main.run`` which maps them to exit codes.
"""
from __future__ import annotations

import logging
import sys
from pathlib import Path

from config.constants import EXIT_BUDGET, EXIT_FAILURE, EXIT_OK, weighting_bound, weighting_total
from shared.models.reports import SuiteSummary
from shared.utils.atomic import write_text_atomic
from treebound.cli.config import CommandConfig
from treebound.cli.output import print_validation, print_verify_summary, print_weight_search
from treebound.constructions.burling import burling, burling_star_forest_decomposition
from treebound.constructions.completion import completion_star_decomposition, crown_decomposition, one_completion
from treebound.constructions.counterexamples import blowup_burling, counterexample_completion
from treebound.constructions.formats import WeightsHeader, write_family_file, write_weights, write_weights_file
from treebound.constructions.weighting import burling_weighting, find_weighting
from treebound.errors import InvalidParameterError
from treebound.graph_core.builders import build, empty
from treebound.graph_core.formats import read_graph_file, write_graph
from treebound.graph_core.graph import Graph
from treebound.graph_core.operations import graph_fingerprint
from treebound.solvers.budget import Deadline
from treebound.solvers.dispatch import solve
from treebound.solvers.models import ParameterName, ParameterValue
from treebound.treedec.decomposition import TreeDecomposition
from treebound.treedec.formats import read_decomposition_file, write_decomposition, write_decomposition_file
from treebound.treedec.measures import BagMeasure
from treebound.treedec.parameters import bag_parameter
from treebound.treedec.validation import validate
from treebound.verify.registry import SuiteOptions, run_suites
from treebound.verify.runner import render_report

logger = logging.getLogger(__name__)


def _emit(text: str, path: Path | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        write_text_atomic(path, text)
        logger.info("file_written path=%s", path)


def _require(value: int | Path | str | None, flag: str, subject: str) -> None:
    if value is None:
        raise InvalidParameterError(f"gen {subject} needs {flag}")


# ----------------------------------------------------------------------
# gen
# ----------------------------------------------------------------------


def _generate(config: CommandConfig) -> tuple[Graph, TreeDecomposition | None]:
    subject = config.subject
    if subject == "graph":
        _require(config.kind, "--kind", subject)
        _require(config.n, "-n", subject)
        return build(config.kind, {"n": config.n}), None
    if subject == "burling":
        _require(config.n, "-n", subject)
        level = burling(config.n)
        if config.family_out is not None:
            write_family_file(config.family_out, level.family.members)
        decomposition = burling_star_forest_decomposition(config.n) if config.decomposition_out else None
        return level.graph, decomposition
    if subject == "completion":
        _require(config.input, "-i", subject)
        base = read_graph_file(config.input)
        completion = one_completion(base)
        decomposition = completion_star_decomposition(base, completion) if config.decomposition_out else None
        return completion.graph, decomposition
    if subject == "blowup":
        _require(config.k, "-k", subject)
        blown, _ = blowup_burling(config.k, config.weights_cache_dir)
        if config.weights_out is not None:
            weights = burling_weighting(config.k, config.weights_cache_dir, allow_search=False)
            header = WeightsHeader(
                bound=weighting_bound(config.k),
                target=weighting_total(config.k),
                graph_hash=graph_fingerprint(burling(config.k).graph),
            )
            write_weights_file(config.weights_out, weights, header)
        return blown, None
    if subject == "c5k":
        _require(config.k, "-k", subject)
        completion = counterexample_completion("pentagon", config.k)
        decomposition = (
            completion_star_decomposition(completion.base, completion) if config.decomposition_out else None
        )
        return completion.graph, decomposition
    if subject == "crown":
        _require(config.n, "-n", subject)
        graph = one_completion(empty(config.n)).graph
        decomposition = crown_decomposition(config.n) if config.decomposition_out else None
        return graph, decomposition
    raise InvalidParameterError(f"unknown gen subject {subject!r}")


def run_gen(config: CommandConfig) -> int:
    graph, decomposition = _generate(config)
    _emit(write_graph(graph), config.output)
    if decomposition is not None and config.decomposition_out is not None:
        write_decomposition_file(config.decomposition_out, decomposition)
    logger.info("gen_done subject=%s n=%s m=%s", config.subject, graph.n, graph.num_edges)
    return EXIT_OK


# ----------------------------------------------------------------------
# solve
# ----------------------------------------------------------------------


def witness_text(result: ParameterValue) -> str:
    """.td for decompositions, one line of 1-based vertices for sets, ``<v> <colour>`` lines for colourings."""
    witness = result.witness
    if isinstance(witness, TreeDecomposition):
        return write_decomposition(witness)
    if result.name is ParameterName.CHI:
        return "".join(f"{v + 1} {colour}\n" for v, colour in enumerate(witness))
    return " ".join(str(v + 1) for v in sorted(witness)) + "\n"


def run_solve(config: CommandConfig) -> int:
    graph = read_graph_file(config.input)
    result = solve(graph, config.param, deadline=Deadline.from_ms(config.budget_ms))
    sys.stdout.write(f"{result.value}\n")
    if config.witness is not None:
        write_text_atomic(config.witness, witness_text(result))
    logger.info("solve_done param=%s n=%s value=%s", result.name.value, graph.n, result.value)
    return EXIT_OK


# ----------------------------------------------------------------------
# validate
# ----------------------------------------------------------------------


def run_validate(config: CommandConfig) -> int:
    graph = read_graph_file(config.graph)
    decomposition = read_decomposition_file(config.decomposition, graph)
    report = validate(decomposition)
    value = None
    if config.param is not None and report.is_valid:
        value = bag_parameter(decomposition, BagMeasure.parse(config.param),
                              deadline=Deadline.from_ms(config.budget_ms)).value
    sys.stdout.write(report.model_dump_json() + "\n")
    if value is not None:
        sys.stdout.write(f"{value}\n")
    print_validation(report, config.param, value)
    return EXIT_OK if report.is_valid else EXIT_FAILURE


# ----------------------------------------------------------------------
# weights
# ----------------------------------------------------------------------


def run_weights(config: CommandConfig) -> int:
    graph = read_graph_file(config.input)
    budget = config.budget_ms / 1000.0 if config.budget_ms is not None else None
    result = find_weighting(graph, config.bound, config.target, budget_seconds=budget, seed=config.seed)
    sys.stdout.write(result.model_dump_json(exclude={"weights"}) + "\n")
    print_weight_search(result.status, result.iterations, result.cuts, result.max_stable)
    if result.weights is not None:
        header = WeightsHeader(bound=config.bound, target=config.target, graph_hash=graph_fingerprint(graph))
        if config.output is not None:
            write_weights_file(config.output, result.weights, header)
        else:
            sys.stdout.write(write_weights(result.weights, header))
        return EXIT_OK
    return EXIT_BUDGET if result.status == "budget-exceeded" else EXIT_FAILURE


# ----------------------------------------------------------------------
# verify
# ----------------------------------------------------------------------


def run_verify(config: CommandConfig) -> int:
    overrides = {
        key: value
        for key, value in (
            ("max_n", config.max_n),
            ("samples", config.samples),
            ("chi_samples", config.chi_samples),
            ("budget_ms", config.budget_ms),
            ("witness_dir", config.witness_dir),
            ("weights_cache_dir", config.weights_cache_dir),
        )
        if value is not None
    }
    if config.max_n is not None:
        # random inequality samples share the vertex cap
        overrides["random_max_n"] = config.max_n
    options = SuiteOptions(seed=config.seed, **overrides)
    results = run_suites(config.subject or "all", options)
    _emit(render_report(results, deterministic=config.deterministic), config.output)
    summary = SuiteSummary.from_results(config.subject or "all", config.seed, results)
    print_verify_summary(summary)
    return EXIT_OK if summary.passed == summary.total else EXIT_FAILURE


HANDLERS = {
    "gen": run_gen,
    "solve": run_solve,
    "validate": run_validate,
    "weights": run_weights,
    "verify": run_verify,
}
