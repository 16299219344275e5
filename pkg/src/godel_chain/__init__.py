"""Truth-table output counts of fully bracketed Gödel implications on finite chains."""

from .analytic import (
    CriticalData,
    Godel4Radicals,
    Precision,
    PrecisionError,
    asymptotic_estimate,
    critical_data,
    godel4_exact,
    p_bottom_closed,
    p_top,
    pair_singular_coefficient,
    phi,
    psi,
    psi_deriv,
)
from .chain import Chain, ChainError, goedel_implies, implication_table
from .oracle import (
    Bracketing,
    CountVector,
    ResourceLimitError,
    brute_counts,
    brute_pair_counts,
    distribution_dp,
    enumerate_bracketings,
    evaluate,
)
from .sequences import (
    LevelCounts,
    PairCounts,
    catalan,
    level_counts,
    non_true_counts,
    pair_counts,
    proportions,
    recover_outputs_from_pairs,
)

__version__ = "0.1.0"
