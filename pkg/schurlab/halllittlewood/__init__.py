"""schurlab.halllittlewood

The Hall-Littlewood measure: P and Q functions in a few variables, the
mean and variance of |lambda| with a direct-summation oracle, and the
principal specialization with its product formula for the law of lambda_1.
"""

from .moments import (
    HLConfig,
    SizeMoments,
    brute_moments,
    graded_weight,
    m_function,
    mean_size,
    size_moments_from_power_sums,
    size_moments_table,
    var_size,
    z_hl,
)
from .polynomials import b_lambda, hl_p, hl_p_polynomial, hl_q, v_polynomial
from .principal import (
    ProductValue,
    m_ratio,
    principal_cdf_direct,
    principal_cdf_lambda1,
    principal_lambda1_table,
    principal_mass,
    principal_mean_lambda1,
    principal_prob,
    shifted_euler,
)

__all__ = [
    "HLConfig",
    "ProductValue",
    "SizeMoments",
    "b_lambda",
    "brute_moments",
    "graded_weight",
    "hl_p",
    "hl_p_polynomial",
    "hl_q",
    "m_function",
    "m_ratio",
    "mean_size",
    "principal_cdf_direct",
    "principal_cdf_lambda1",
    "principal_lambda1_table",
    "principal_mass",
    "principal_mean_lambda1",
    "principal_prob",
    "shifted_euler",
    "size_moments_from_power_sums",
    "size_moments_table",
    "v_polynomial",
    "var_size",
    "z_hl",
]
