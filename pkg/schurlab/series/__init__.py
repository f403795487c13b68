"""schurlab.series

Truncated formal power and Laurent series over exact rationals or doubles,
with certified bounds on the discarded tails.

The exact mode (fractions.Fraction) is the default; the approximate mode
uses doubles and numpy convolutions. Modes never mix.
"""

from .bounds import TailBound, geometric_tail_bound, laurent_tail_bound, majorant
from .laurent import (
    TruncatedLaurentSeries,
    series_add,
    series_exp,
    series_inverse,
    series_mul,
    series_neg,
    series_scale,
)
from .products import product_form

__all__ = [
    "TailBound",
    "TruncatedLaurentSeries",
    "geometric_tail_bound",
    "laurent_tail_bound",
    "majorant",
    "product_form",
    "series_add",
    "series_exp",
    "series_inverse",
    "series_mul",
    "series_neg",
    "series_scale",
]
