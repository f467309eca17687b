"""
treebound command line.

Usage:
    treebound gen c5k -k 1 -o g.gr
    treebound gen burling -n 3 -o g3.gr --family s3.txt -t g3.td
    treebound solve --param tw -i g.gr --witness w.td
    treebound validate -g g.gr -t d.td --param alpha
    treebound weights -i g3.gr --bound 8 --target 16 -o w3.txt
    treebound verify --suite all --seed 0 --deterministic -o report.jsonl

Exit codes: 0 success, 1 check failure / infeasible / invalid decomposition,
2 usage error, 3 budget exceeded, 4 malformed input file.
"""
from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

from pydantic import ValidationError

from config import settings
from config.constants import EXIT_BUDGET, EXIT_FAILURE, EXIT_MALFORMED, EXIT_USAGE, SUITE_ORDER
from shared.utils.logging import setup_logging
from treebound.cli.commands import HANDLERS
from treebound.cli.config import CommandConfig
from treebound.errors import (
    BudgetExceededError,
    DomainError,
    InvalidParameterError,
    MalformedInputError,
    TreeboundError,
)

logger = logging.getLogger("treebound")

GEN_SUBJECTS = ("graph", "burling", "completion", "blowup", "c5k", "crown")
SOLVE_PARAMS = ("alpha", "chi", "omega", "tw", "tree-alpha", "tree-chi", "tree-tw")
MEASURES = ("size", "alpha", "chi", "tw")


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--log-level", default=settings.LOG_LEVEL,
                        help=f"Logging level (default: {settings.LOG_LEVEL})")
    parser.add_argument("--budget-ms", type=int, default=None,
                        help="Wall-clock budget for the exact solvers, in milliseconds")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treebound",
        description="Constructions, exact solvers and checks for tree-independence and tree-chromatic bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="Generate a graph (and optionally its family / decomposition / weights)")
    gen.add_argument("subject", choices=GEN_SUBJECTS)
    gen.add_argument("-n", type=int, default=None, help="Size or Burling level")
    gen.add_argument("-k", type=int, default=None, help="Number of pentagons or blowup level")
    gen.add_argument("--kind", choices=("complete", "empty", "cycle", "path"), default=None)
    gen.add_argument("-i", "--input", type=Path, default=None, help="Base graph (.gr) for 'completion'")
    gen.add_argument("-o", "--output", type=Path, default=None, help="Graph output (.gr); stdout if omitted")
    gen.add_argument("-t", "--decomposition", dest="decomposition_out", type=Path, default=None,
                     help="Write the construction's tree-decomposition (.td)")
    gen.add_argument("--family", dest="family_out", type=Path, default=None,
                     help="Write the Burling stable-set family")
    gen.add_argument("--weights", dest="weights_out", type=Path, default=None,
                     help="Write the Burling weighting used by 'blowup'")
    gen.add_argument("--weights-cache-dir", type=Path, default=None)
    _common(gen)

    solve = sub.add_parser("solve", help="Compute a parameter exactly")
    solve.add_argument("--param", required=True, choices=SOLVE_PARAMS)
    solve.add_argument("-i", "--input", type=Path, required=True)
    solve.add_argument("--witness", type=Path, default=None, help="Write the certifying witness")
    _common(solve)

    check = sub.add_parser("validate", help="Validate a tree-decomposition")
    check.add_argument("-g", "--graph", type=Path, required=True)
    check.add_argument("-t", "--decomposition", type=Path, required=True)
    check.add_argument("--param", choices=MEASURES, default=None, help="Also report this bag measure")
    _common(check)

    weights = sub.add_parser("weights", help="Search a weighting with light stable sets")
    weights.add_argument("-i", "--input", type=Path, required=True)
    weights.add_argument("--bound", type=int, required=True)
    weights.add_argument("--target", type=int, required=True)
    weights.add_argument("--seed", type=int, default=0)
    weights.add_argument("-o", "--output", type=Path, default=None)
    _common(weights)

    verify = sub.add_parser("verify", help="Run the verification suites")
    verify.add_argument("--suite", choices=(*SUITE_ORDER, "all"), default="all")
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--max-n", type=int, default=None,
                        help="Largest base graph for the completion checks and the random inequality samples")
    verify.add_argument("--samples", type=int, default=None)
    verify.add_argument("--chi-samples", type=int, default=None)
    verify.add_argument("--deterministic", action="store_true", help="Zero the elapsed-time field")
    verify.add_argument("--witness-dir", type=Path, default=None)
    verify.add_argument("--weights-cache-dir", type=Path, default=None)
    verify.add_argument("-o", "--output", type=Path, default=None, help="JSON-lines report; stdout if omitted")
    _common(verify)
    return parser


def _config_from(args: argparse.Namespace) -> CommandConfig:
    fields = {key: value for key, value in vars(args).items() if value is not None}
    if args.command == "verify":
        fields["subject"] = fields.pop("suite")
    return CommandConfig(**fields)


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE

    try:
        config = _config_from(args)
    except ValidationError as exc:
        first = exc.errors()[0]
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"treebound: error: {first['msg']}\n")
        return EXIT_USAGE

    setup_logging(config.log_level)
    try:
        return HANDLERS[config.command](config)
    except MalformedInputError as exc:
        logger.error("malformed_input error=%s", exc)
        return EXIT_MALFORMED
    except BudgetExceededError as exc:
        logger.error("budget_exceeded error=%s", exc)
        return EXIT_BUDGET
    except (InvalidParameterError, DomainError) as exc:
        logger.error("usage_error error=%s", exc)
        return EXIT_USAGE
    except TreeboundError as exc:
        logger.error("failed error=%s: %s", type(exc).__name__, exc)
        return EXIT_FAILURE
    except Exception:
        logger.exception("internal_error command=%s", config.command)
        return EXIT_FAILURE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
