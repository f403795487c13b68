"""partitions.tableaux

Standard shifted tableaux: the closed-form count g^lambda, an exhaustive
backtracking oracle, and the identity sum 2^(N - l) (g^lambda)^2 = N!.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from schurlab.common.errors import InfeasibleScaleError, IntegralityError, PreconditionError

from .enumerate import iter_strict
from .partition import StrictPartition, shifted_shape

logger = logging.getLogger(__name__)

ORACLE_MAX_SIZE = 14
IDENTITY_MAX_N = 20


def count_shifted_tableaux(partition: StrictPartition) -> int:
    """Count fillings of the shifted shape by 1..N increasing along rows and
    down columns, by placing 1, 2, ... N one cell at a time.

    Raises:
        InfeasibleScaleError: If |lambda| exceeds the oracle scale.
    """
    if partition.size > ORACLE_MAX_SIZE:
        raise InfeasibleScaleError(
            f"tableau oracle supports |lambda| <= {ORACLE_MAX_SIZE}",
            size=partition.size,
        )
    shape = shifted_shape(partition)
    target = partition.parts
    rows = len(target)

    @lru_cache(maxsize=None)
    def placements(filled: tuple[int, ...]) -> int:
        if filled == target:
            return 1
        total = 0
        for i in range(rows):
            if filled[i] == target[i]:
                continue
            # next free cell of row i+1 sits in column (i+1) + filled[i]
            cell = (i + 1, i + 1 + filled[i])
            above = (i, cell[1])
            if i > 0 and above in shape and filled[i - 1] < above[1] - above[0] + 1:
                continue
            total += placements(filled[:i] + (filled[i] + 1,) + filled[i + 1:])
        return total

    return placements((0,) * rows)


def g_formula(partition: StrictPartition) -> int:
    """g^lambda = |lambda|!/prod lambda_i! * prod_{i<j} (l_i - l_j)/(l_i + l_j).

    Raises:
        IntegralityError: If the exact value is not a nonnegative integer.
    """
    parts = partition.parts
    value = Fraction(factorial(partition.size), prod(factorial(p) for p in parts))
    for i, a in enumerate(parts):
        for b in parts[i + 1:]:
            value *= Fraction(a - b, a + b)
    if value.denominator != 1 or value < 0:
        raise IntegralityError(
            f"g formula gave {value} for {partition}", partition=str(partition),
        )
    return value.numerator


def verify_factorial_identity(N: int) -> tuple[int, int]:
    """(sum over strict lambda of N of 2^(N - l) (g^lambda)^2, N!)."""
    if not 1 <= N <= IDENTITY_MAX_N:
        raise PreconditionError(f"N must lie in [1, {IDENTITY_MAX_N}], got {N}")
    lhs = sum(
        2 ** (N - lam.length) * g_formula(lam) ** 2 for lam in iter_strict(N)
    )
    logger.debug("factorial identity N=%d lhs=%d", N, lhs)
    return lhs, factorial(N)
