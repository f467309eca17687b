"""1-completions, the Burling sequence, weightings, blowups and counterexamples."""
from treebound.constructions.burling import (
    BurlingLevel,
    StableSetFamily,
    burling,
    burling_star_forest_decomposition,
)
from treebound.constructions.completion import (
    CompletionResult,
    completion_lift_decomposition,
    completion_star_decomposition,
    crown_decomposition,
    one_completion,
)
from treebound.constructions.counterexamples import CounterexampleKind, blowup_burling, counterexample
from treebound.constructions.weighting import WeightSearchResult, burling_weighting, find_weighting, verify_weighting

__all__ = [
    "BurlingLevel",
    "CompletionResult",
    "CounterexampleKind",
    "StableSetFamily",
    "WeightSearchResult",
    "blowup_burling",
    "burling",
    "burling_star_forest_decomposition",
    "burling_weighting",
    "completion_lift_decomposition",
    "completion_star_decomposition",
    "counterexample",
    "crown_decomposition",
    "find_weighting",
    "one_completion",
    "verify_weighting",
]
