"""Sorting permutations with plane permutations.

Exact block-interchange distance with a constructive sorter, transposition
distance bounds, reversal distance bounds for signed permutations, and
brute-force oracles to check all of them.
"""

from .perm import (
    CycleStats,
    GroundSet,
    Permutation,
    PermutationError,
    compose,
    conjugate,
    cycle_stats,
    inverse,
    parse_one_line,
    stirling_first_unsigned,
)
from .plane import (
    GainClassification,
    Interchange,
    PlanePermutation,
    apply_interchange,
    classify_gain,
    diagonal,
    render_two_row,
)
from .distance import (
    Bounds,
    SortTrace,
    bid_census_formula,
    bid_exact,
    find_gain_interchange,
    max_cycle_gap,
    sort_by_block_interchanges,
    td_bounds,
)
from .signed import (
    BreakpointMetrics,
    Reversal,
    SkewEmbedding,
    apply_reversal,
    breakpoint_metrics,
    find_two_reversal,
    greedy_sort_reversals,
    reversal_lower_bound,
    skew_embed,
)

from .oracle import (
    CapExceeded,
    bfs_distance,
    census,
    check_conjecture,
    distance_of,
    distance_table,
    distribution_poly,
    lehmer_rank,
    lehmer_unrank,
    state_rank,
    tightness_report,
    zagier_census,
    zagier_formula,
)

__version__ = "0.1.0"
