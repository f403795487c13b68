"""common.schema.base

Base type aliases, enums, and constants shared across schurlab.
"""

from fractions import Fraction
from typing import Literal

# Arithmetic modes of series, pfaffians and kernels
Mode = Literal["exact", "approx"]
EXACT: Mode = "exact"
APPROX: Mode = "approx"

# A scalar is an exact rational (arbitrary-precision) or a double
Scalar = Fraction | float
Rational = Fraction | int

OutputFormat = Literal["csv", "json"]
CSV: OutputFormat = "csv"
JSON: OutputFormat = "json"
