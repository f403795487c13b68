"""common.utils

Helpers for scalars and result tables.
"""

from . import numeric, tables

__all__ = ["numeric", "tables"]
