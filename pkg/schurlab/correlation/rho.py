"""correlation.rho

Correlation functions rho(A) = P_SS(lambda contains A) of the shifted Schur
measure, by the pfaffian of M(A) and by direct summation over strict
partitions.
"""

import logging
from typing import Iterable, NamedTuple

from schurlab.common.errors import InfeasibleScaleError, PreconditionError
from schurlab.common.schema import EXACT, Scalar
from schurlab.common.utils.numeric import one, to_mode, zero
from schurlab.partitions import StrictPartition, iter_strict
from schurlab.schurq import (
    PowerSumSpec,
    alpha,
    pfaffian_with_sensitivity,
    q_coeffs,
    schur_q_from_coeffs,
    z_ss,
)
from schurlab.series import geometric_tail_bound
from schurlab.series.bounds import sqrt_rate

from .kernel import (
    DEFAULT_ORDER,
    CorrelationQuery,
    KernelSpec,
    as_query,
    assemble_with_errors,
)

logger = logging.getLogger(__name__)

BRUTEFORCE_MAX_CUTOFF = 40


class RhoValue(NamedTuple):
    """A correlation value and a bound on its error.

    For the pfaffian route the bound covers truncation of J and of the
    kernel sums; for direct summation it covers the omitted partitions.
    """
    value: Scalar
    error: float


def rho_pfaffian(ks: KernelSpec, points: CorrelationQuery | Iterable[int]) -> RhoValue:
    """rho(A) = Pf M(A), with the kernel errors propagated to first order."""
    query = as_query(points)
    if not len(query):
        return RhoValue(one(ks.table.coeffs.mode), 0.0)
    matrix, errors = assemble_with_errors(ks, query)
    value, error = pfaffian_with_sensitivity(matrix, errors)
    logger.debug("rho%s = %s (+- %.3g)", query.ks, value, error)
    return RhoValue(value, error)


def _variables(spec: PowerSumSpec) -> tuple[Scalar, ...]:
    xs = spec.variables()
    if xs is None:
        raise PreconditionError(
            f"direct summation needs a variable list, got {spec.describe()}",
        )
    return xs


def rho_bruteforce(
        ks: KernelSpec,
        points: CorrelationQuery | Iterable[int],
        cutoff: int,
) -> RhoValue:
    """Sum Q_lambda(X) P_lambda(Y) / Z_SS over strict lambda containing A
    with |lambda| <= cutoff.

    The omitted mass is bounded through |Q_lambda(X)| <= Q_lambda(|X|) and
    the majorant of prod (1 + |x y| u)/(1 - |x y| u).

    Raises:
        PreconditionError: If a specialization has no variable list or
            cutoff < sum(A).
        InfeasibleScaleError: If cutoff exceeds BRUTEFORCE_MAX_CUTOFF.
    """
    query = as_query(points)
    if cutoff < sum(query.ks):
        raise PreconditionError(f"cutoff {cutoff} is below |A| = {sum(query.ks)}")
    if cutoff > BRUTEFORCE_MAX_CUTOFF:
        raise InfeasibleScaleError(
            f"direct summation is limited to cutoff <= {BRUTEFORCE_MAX_CUTOFF}",
            cutoff=cutoff,
        )
    mode = ks.mode
    specX, specY = ks.specX.as_mode(mode), ks.specY.as_mode(mode)
    xs, ys = _variables(specX), _variables(specY)
    qx, qy = q_coeffs(specX, cutoff), q_coeffs(specY, cutoff)
    required = set(query.ks)
    longest = min(len(xs), len(ys))
    total = zero(mode)
    for size in range(sum(query.ks), cutoff + 1):
        for lam in iter_strict(size):
            if lam.length > longest or not required.issubset(lam.parts):
                continue
            q = schur_q_from_coeffs(lam, qx, mode)
            p = schur_q_from_coeffs(lam, qy, mode) / to_mode(2 ** lam.length, mode)
            total += q * p
    z = z_ss(specX, specY)
    products = [abs(x * y) for x in xs for y in ys]
    bound = geometric_tail_bound(products, cutoff, sqrt_rate(max(products, default=0)))
    tail = float(bound.tail_sum(cutoff + 1)) / abs(float(z))
    logger.debug("direct rho%s cutoff=%d tail=%.3g", query.ks, cutoff, tail)
    return RhoValue(total / z, tail)


def shifted_schur_probability(partition: StrictPartition, ks: KernelSpec) -> Scalar:
    """P_SS({lambda}) = Q_lambda(X) P_lambda(Y) / Z_SS."""
    mode = ks.mode
    specX, specY = ks.specX.as_mode(mode), ks.specY.as_mode(mode)
    needed = sum(partition.parts[:2])
    q = schur_q_from_coeffs(partition, q_coeffs(specX, needed), mode)
    p = schur_q_from_coeffs(partition, q_coeffs(specY, needed), mode) \
        / to_mode(2 ** partition.length, mode)
    z = z_ss(specX, specY)
    if mode == EXACT and isinstance(z, float):
        raise PreconditionError(
            "Z_SS has no exact value for this pair; use approximate mode",
        )
    return q * p / z


def alpha_kernel(
        n: int,
        a: Scalar,
        T: int = DEFAULT_ORDER,
        k_tail: int | None = None,
) -> KernelSpec:
    """Kernel of the measure with both sides alpha-specialized, p_k = n a^k.

    Exact when a is rational; the specialization is n copies of a.
    """
    spec = alpha(n, a)
    return KernelSpec(spec, spec, T, spec.mode, k_tail)
