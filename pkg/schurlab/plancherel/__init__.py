"""schurlab.plancherel

The shifted Plancherel measure and its poissonization, the longest ascent
pair statistic L of a permutation (whose law equals that of lambda_1), and
seeded Monte Carlo sampling of L.
"""

from .ascent import (
    CENSUS_MAX_N,
    TIERS,
    PermutationView,
    ascent_census,
    longest_ascent_pair_dp,
    longest_ascent_pair_exhaustive,
    longest_ascent_pair_fast,
)
from .measure import (
    exact_lambda1_distribution,
    law_mean,
    p_psp,
    p_spl,
    poissonized_lambda1_distribution,
)
from .sampling import SampleRun, kolmogorov_distance, mc_poissonized, mc_scaled_l

__all__ = [
    "CENSUS_MAX_N",
    "PermutationView",
    "SampleRun",
    "TIERS",
    "ascent_census",
    "exact_lambda1_distribution",
    "kolmogorov_distance",
    "law_mean",
    "longest_ascent_pair_dp",
    "longest_ascent_pair_exhaustive",
    "longest_ascent_pair_fast",
    "mc_poissonized",
    "mc_scaled_l",
    "p_psp",
    "p_spl",
    "poissonized_lambda1_distribution",
]
