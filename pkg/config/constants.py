"""
Domain constants for treebound.

These values encode fixed facts about the constructions and the CLI
contract. They don't change per deployment.

For runtime configuration (guards, cache paths), see config.settings.
"""
from __future__ import annotations


# =============================================================================
# EXIT CODES
# =============================================================================

EXIT_OK: int = 0
EXIT_FAILURE: int = 1
EXIT_USAGE: int = 2
EXIT_BUDGET: int = 3
EXIT_MALFORMED: int = 4


# =============================================================================
# RANDOM INSTANCES
# =============================================================================

# Erdős–Rényi edge probabilities; one is drawn per sample
EDGE_PROBABILITIES: tuple[float, ...] = (0.2, 0.5, 0.8)

DEFAULT_SEED: int = 0


# =============================================================================
# BURLING SEQUENCE
# =============================================================================

# |V(G_n)| and |S_n| for n = 1..4
BURLING_VERTEX_COUNTS: dict[int, int] = {1: 1, 2: 3, 3: 13, 4: 181}
BURLING_FAMILY_SIZES: dict[int, int] = {1: 1, 2: 2, 3: 8, 4: 128}

# Root of the path-addressed Burling labels
BURLING_ROOT_LABEL: str = "r"


def weighting_bound(k: int) -> int:
    """Upper bound on the weight of every stable set of G_k: 2^(2^(k-1) - 1)."""
    return 2 ** (2 ** (k - 1) - 1)


def weighting_total(k: int) -> int:
    """Total weight (k+1)/2 * 2^(2^(k-1) - 1) of the witness on G_k (an integer for k >= 1)."""
    return (k + 1) * weighting_bound(k) // 2


# =============================================================================
# VERIFY SUITES
# =============================================================================

SUITE_ORDER: tuple[str, ...] = ("completion", "crown", "burling", "inequalities", "refutation")
