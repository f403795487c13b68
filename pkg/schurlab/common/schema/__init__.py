"""common.schema

Schema definitions, enums, and constants for schurlab.
"""

from .base import APPROX, CSV, EXACT, JSON, Mode, OutputFormat, Rational, Scalar

__all__ = [
    "APPROX",
    "CSV",
    "EXACT",
    "JSON",
    "Mode",
    "OutputFormat",
    "Rational",
    "Scalar",
]
