"""schurlab.schurq

Schur Q- and P-functions under power-sum specializations, the pfaffian
engines behind them, a generating-function oracle and the normalising
constant Z_SS of the shifted Schur measure.
"""

from .oracle import schur_q_genfun_oracle
from .pfaffian import SkewMatrix, pfaffian, pfaffian_with_sensitivity
from .qfunctions import (
    cauchy_graded,
    m_matrix,
    q_coeffs,
    q_exponential_closed_form,
    q_rs,
    schur_p,
    schur_q,
    schur_q_from_coeffs,
    z_ss,
)
from .specs import (
    Decay,
    PowerSumSpec,
    alpha,
    custom,
    exponential,
    finite_vars,
    principal,
)

__all__ = [
    "Decay",
    "PowerSumSpec",
    "SkewMatrix",
    "alpha",
    "cauchy_graded",
    "custom",
    "exponential",
    "finite_vars",
    "m_matrix",
    "pfaffian",
    "pfaffian_with_sensitivity",
    "principal",
    "q_coeffs",
    "q_exponential_closed_form",
    "q_rs",
    "schur_p",
    "schur_q",
    "schur_q_from_coeffs",
    "schur_q_genfun_oracle",
    "z_ss",
]
