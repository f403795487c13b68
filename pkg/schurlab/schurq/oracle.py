"""schurq.oracle

Generating-function oracle for Schur Q-functions of few variables.

Q_lambda(X) is the coefficient of z_1^l_1 ... z_m^l_m in

    prod_i Q(z_i) prod_{i<j} (z_i - z_j)/(z_i + z_j),

with every (z_i - z_j)/(z_i + z_j) expanded as
1 + 2 sum_{k>=1} (-1)^k (z_j/z_i)^k. Choosing one power k_ij per pair
fixes the exponent each Q(z_i) must supply,

    e_i = l_i + sum_{j>i} k_ij - sum_{h<i} k_hi >= 0,

and the constraints leave finitely many choices, so the extraction is an
exact finite sum.
"""

from fractions import Fraction
from typing import Sequence

from schurlab.common.errors import InfeasibleScaleError, PreconditionError
from schurlab.common.schema import Scalar
from schurlab.partitions import StrictPartition
from schurlab.series import product_form

ORACLE_MAX_VARS = 4


def _pair_weight(k: int) -> int:
    if k == 0:
        return 1
    return -2 if k % 2 else 2


def _compositions(count: int, budget: int):
    """All tuples of `count` nonnegative integers with sum <= budget."""
    if count == 0:
        yield ()
        return
    for first in range(budget + 1):
        for rest in _compositions(count - 1, budget - first):
            yield (first,) + rest


def schur_q_genfun_oracle(partition: StrictPartition, xs: Sequence[Scalar]) -> Fraction:
    """Coefficient extraction of Q_lambda(xs), exact.

    Raises:
        PreconditionError: If lambda has more parts than there are variables.
        InfeasibleScaleError: If more than four variables are given.
    """
    m = len(xs)
    if m > ORACLE_MAX_VARS:
        raise InfeasibleScaleError(
            f"generating-function oracle supports at most {ORACLE_MAX_VARS} variables",
            variables=m,
        )
    if partition.length > m:
        raise PreconditionError(
            f"{partition} has more parts than the {m} variables",
        )
    if m == 0:
        return Fraction(1)
    parts = partition.padded(m)
    q = product_form([Fraction(x) for x in xs], partition.size).coeffs
    # plus[v] accumulates sum_{j>v} k_vj as later variables are processed
    plus = [0] * m

    def collect(i: int) -> Fraction:
        budget = parts[i] + plus[i]
        if i == 0:
            return q[budget]
        total = Fraction(0)
        for ks in _compositions(i, budget):
            exponent = budget - sum(ks)
            weight = q[exponent]
            if not weight:
                continue
            for h, k in enumerate(ks):
                weight *= _pair_weight(k)
                plus[h] += k
            total += weight * collect(i - 1)
            for h, k in enumerate(ks):
                plus[h] -= k
        return total

    return collect(m - 1)
