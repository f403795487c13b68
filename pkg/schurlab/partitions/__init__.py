"""schurlab.partitions

Partitions, strict partitions, shifted shapes and standard shifted tableaux.
"""

from .enumerate import (
    enumerate_partitions,
    enumerate_strict,
    iter_strict,
    strict_partition_count,
)
from .partition import Partition, ShiftedShape, StrictPartition, shifted_shape
from .tableaux import count_shifted_tableaux, g_formula, verify_factorial_identity

__all__ = [
    "Partition",
    "ShiftedShape",
    "StrictPartition",
    "count_shifted_tableaux",
    "enumerate_partitions",
    "enumerate_strict",
    "g_formula",
    "iter_strict",
    "shifted_shape",
    "strict_partition_count",
    "verify_factorial_identity",
]
