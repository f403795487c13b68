"""plancherel.measure

The shifted Plancherel measure 2^(N - l)(g^lambda)^2 / N! on strict
partitions of N, its poissonization, and the laws of lambda_1.
"""

import logging
import math
from collections import defaultdict
from fractions import Fraction

from scipy import stats

from schurlab.common.errors import InfeasibleScaleError, PreconditionError
from schurlab.partitions import StrictPartition, g_formula, iter_strict

logger = logging.getLogger(__name__)

EXACT_LAW_MAX_N = 40
POISSONIZED_MAX_CUTOFF = 80


def p_spl(partition: StrictPartition, N: int) -> Fraction:
    """P_SPl,N({lambda}) as an exact rational.

    Raises:
        PreconditionError: If |lambda| != N.
    """
    if partition.size != N:
        raise PreconditionError(f"|lambda| = {partition.size} but N = {N}")
    g = g_formula(partition)
    return Fraction(2 ** (N - partition.length) * g * g, math.factorial(N))


def log_g(partition: StrictPartition) -> float:
    """log g^lambda in doubles, for sizes where the exact count is not needed."""
    parts = partition.parts
    value = math.lgamma(partition.size + 1) - sum(math.lgamma(p + 1) for p in parts)
    for i, a in enumerate(parts):
        for b in parts[i + 1:]:
            value += math.log((a - b) / (a + b))
    return value


def p_psp(partition: StrictPartition, xi: float) -> float:
    """e^(-xi) xi^|lambda| 2^(|lambda| - l) (g^lambda / |lambda|!)^2.

    Raises:
        PreconditionError: If xi <= 0.
    """
    if xi <= 0:
        raise PreconditionError(f"xi must be positive, got {xi}")
    n = partition.size
    if not n:
        return math.exp(-xi)
    log_p = (
        -xi + n * math.log(xi) + (n - partition.length) * math.log(2.0)
        + 2.0 * (log_g(partition) - math.lgamma(n + 1))
    )
    return math.exp(log_p)


def exact_lambda1_distribution(N: int) -> dict[int, Fraction]:
    """P_SPl,N(lambda_1 = h) for every h that occurs, keyed by h (descending).

    Raises:
        PreconditionError: If N < 0.
        InfeasibleScaleError: If N > EXACT_LAW_MAX_N.
    """
    if N < 0:
        raise PreconditionError(f"N must be nonnegative, got {N}")
    if N > EXACT_LAW_MAX_N:
        raise InfeasibleScaleError(
            f"exact lambda_1 law is limited to N <= {EXACT_LAW_MAX_N}", N=N,
        )
    law: dict[int, Fraction] = defaultdict(Fraction)
    for lam in iter_strict(N):
        law[lam.parts[0] if lam.parts else 0] += p_spl(lam, N)
    return dict(law)


def poissonized_lambda1_distribution(xi: float, cutoff: int) -> tuple[dict[int, float], float]:
    """P^xi_PSP(lambda_1 = h) summed over |lambda| <= cutoff.

    Returns:
        (law keyed by h, mass of |lambda| > cutoff), the latter being the
        Poisson(xi) tail beyond cutoff.
    """
    if xi <= 0:
        raise PreconditionError(f"xi must be positive, got {xi}")
    if not 0 <= cutoff <= POISSONIZED_MAX_CUTOFF:
        raise InfeasibleScaleError(
            f"poissonized law is limited to cutoff <= {POISSONIZED_MAX_CUTOFF}",
            cutoff=cutoff,
        )
    law: dict[int, float] = defaultdict(float)
    for n in range(cutoff + 1):
        for lam in iter_strict(n):
            law[lam.parts[0] if lam.parts else 0] += p_psp(lam, xi)
    tail = float(stats.poisson.sf(cutoff, xi))
    logger.debug("poissonized lambda_1 law xi=%g cutoff=%d tail=%.3g", xi, cutoff, tail)
    return dict(law), tail


def law_mean(law: dict[int, Fraction] | dict[int, float]):
    """sum_h h P(h)."""
    return sum(h * p for h, p in law.items())
