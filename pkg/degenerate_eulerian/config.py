# -*- coding: utf-8 -*-
"""
Configuration constants for the degenerate Eulerian identity verifier.

All tunable parameters are centralized here for easy adjustment.
The command-line tool reads no environment variables and no config files;
everything it needs is fixed below.
"""

from typing import Dict, Tuple

# =============================================================================
# Variable Universe
# =============================================================================

# Ordered universe of indeterminates. Exponent vectors follow this order and
# graded-lex comparisons break ties in it (x > t > λ > u > q).
VARIABLES: Tuple[str, ...] = ("x", "t", "λ", "u", "q")

# ASCII spellings accepted on the command line
VARIABLE_ALIASES: Dict[str, str] = {
    "lambda": "λ",
    "lam": "λ",
}


# =============================================================================
# Default Index Ranges
# =============================================================================

DEFAULT_N_MAX = 8
DEFAULT_M_MAX = 6

IDENTITY_LIMITS = {
    "power_sum_n_cap": 4,          # EQ11: n ≤ min(n_max, 4)
    "table_display_rows": 3,       # EQ08: the four displayed series k = 0..3
    "table_series_order": 10,      # EQ08: compare to order 10
    "fubini_oracle_cap": 5,        # LIMIT_LAMBDA_ZERO: Fubini oracle for n ≤ 5
    "bruteforce_cap": 8,           # BRUTE_FORCE_EULERIAN: n ≤ min(n_max, 8)
}


# =============================================================================
# Oracle Bounds (factorial / exponential enumeration)
# =============================================================================

ORACLE_BOUNDS = {
    "permutations_max_n": 9,          # eulerian_bruteforce
    "ordered_partitions_max_n": 6,    # ordered_bell_bruteforce (n^n maps)
}


# =============================================================================
# Fast Mode (random rational points; never used for acceptance)
# =============================================================================

FAST_MODE_CONFIG = {
    "points": 3,
    "seed": 20170301,
    "numerator_range": (-40, 40),
    "denominator_range": (1, 12),
}


# =============================================================================
# Command-Line Surface
# =============================================================================

TABLE_KINDS: Tuple[str, ...] = (
    "eulerian",
    "stirling1",
    "stirling2",
    "deg-eulerian",
    "deg-stirling1",
    "ordered-bell",
)

# Generating functions offered by `expand`
GF_KINDS: Tuple[str, ...] = (
    "eulerian",
    "deg-eulerian",
    "ordered-bell",
    "frobenius-euler",
)

OUTPUT_FORMATS: Tuple[str, ...] = ("json", "csv", "text")

EXIT_CODES = {
    "ok": 0,
    "identity_failed": 1,
    "usage": 2,
    "pole": 3,
}

LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"
