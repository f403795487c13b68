"""halllittlewood.principal

The Hall-Littlewood measure under the principal specialization
X = Y = (t, t^2, ...) with the same parameter t in (0, 1):

    P(lambda) = prod_{r>=2} (1 - t^r) t^(sum_j lambda'_j^2 + |lambda|) / prod_j (t; t)_{m_j},

and the law of lambda_1 from the triple product

    P(lambda_1 < h) = prod_{k>=1} (1 - t^(dk)) (1 - t^(dk+1)) (1 - t^(dk-1)),  d = 2h + 1.

Infinite products stop once the next factor is within PRODUCT_EPS of 1;
the omitted factors are bounded through |log(1 - y)| <= y / (1 - y).
"""

import logging
import math
from typing import NamedTuple

from schurlab.common.errors import InfeasibleScaleError, PreconditionError
from schurlab.common.schema import Scalar
from schurlab.partitions import Partition, enumerate_partitions
from schurlab.schurq import principal

from .moments import m_function

logger = logging.getLogger(__name__)

PRODUCT_EPS = 1e-17
MAX_FACTORS = 200_000
DIRECT_MAX_SIZE = 60


class ProductValue(NamedTuple):
    """A truncated product or sum and a bound on what was left out."""
    value: float
    error: float


def _check_t(t: Scalar) -> float:
    if not 0 < t < 1:
        raise PreconditionError(f"t must lie in (0, 1), got {t}")
    return float(t)


def _factor_count(t: float, first: int) -> int:
    """Number of exponents past `first` before t^e drops below PRODUCT_EPS."""
    count = max(0, math.ceil(math.log(PRODUCT_EPS) / math.log(t)) - first + 1)
    if count > MAX_FACTORS:
        raise InfeasibleScaleError(
            f"t = {t} needs {count} factors; the limit is {MAX_FACTORS}", t=t,
        )
    return count


def _log_tail(t: float, first: int, step: int) -> float:
    """Bound on |log prod_{e = first, first + step, ...} (1 - t^e)|."""
    head = t ** first
    return head / ((1.0 - head) * (1.0 - t ** step))


def shifted_euler(t: Scalar, start: int = 2) -> ProductValue:
    """prod_{r >= start} (1 - t^r)."""
    t = _check_t(t)
    end = start + _factor_count(t, start)
    value = math.prod(1.0 - t ** r for r in range(start, end))
    bound = _log_tail(t, end, 1)
    return ProductValue(value, value * bound)


def t_pochhammer(t: float, m: int) -> float:
    """(t; t)_m = prod_{j=1}^m (1 - t^j)."""
    return math.prod(1.0 - t ** j for j in range(1, m + 1))


def principal_weight(partition: Partition, t: float) -> float:
    """t^(sum lambda'_j^2 + |lambda|) / prod_j (t; t)_{m_j}."""
    exponent = sum(c * c for c in partition.conjugate().parts) + partition.size
    denominator = math.prod(t_pochhammer(t, m) for m in partition.multiplicities.values())
    return t ** exponent / denominator


def principal_prob(partition: Partition, t: Scalar) -> ProductValue:
    """P_{t,Prin}({lambda}) with the error of the truncated Euler product."""
    t = _check_t(t)
    euler = shifted_euler(t)
    weight = principal_weight(partition, t)
    return ProductValue(euler.value * weight, euler.error * weight)


def principal_cdf_lambda1(h: int, t: Scalar) -> ProductValue:
    """P(lambda_1 < h) from the triple product.

    Raises:
        PreconditionError: If h < 1 or t is outside (0, 1).
    """
    t = _check_t(t)
    if h < 1:
        raise PreconditionError(f"h must be positive, got {h}")
    d = 2 * h + 1
    value, k = 1.0, 1
    while t ** (d * k - 1) >= PRODUCT_EPS:
        value *= (1.0 - t ** (d * k)) * (1.0 - t ** (d * k + 1)) * (1.0 - t ** (d * k - 1))
        k += 1
        if k > MAX_FACTORS:
            raise InfeasibleScaleError(f"triple product at t = {t} did not settle", t=t, h=h)
    bound = 3.0 * _log_tail(t, d * k - 1, d)
    return ProductValue(value, value * bound)


def principal_cdf_direct(h: int, t: Scalar, max_size: int = 40) -> float:
    """sum of P(lambda) over lambda_1 < h and |lambda| <= max_size."""
    t = _check_t(t)
    if max_size > DIRECT_MAX_SIZE:
        raise InfeasibleScaleError(f"direct sums are limited to |lambda| <= {DIRECT_MAX_SIZE}")
    if h < 1:
        raise PreconditionError(f"h must be positive, got {h}")
    euler = shifted_euler(t).value
    return euler * sum(
        principal_weight(lam, t)
        for N in range(max_size + 1)
        for lam in enumerate_partitions(N, max_part=h - 1)
    )


def principal_mass(t: Scalar, max_size: int) -> float:
    """Total probability of |lambda| <= max_size."""
    t = _check_t(t)
    if max_size > DIRECT_MAX_SIZE:
        raise InfeasibleScaleError(f"direct sums are limited to |lambda| <= {DIRECT_MAX_SIZE}")
    euler = shifted_euler(t).value
    return euler * sum(
        principal_weight(lam, t)
        for N in range(max_size + 1)
        for lam in enumerate_partitions(N)
    )


def principal_mean_lambda1(t: Scalar) -> ProductValue:
    """E(lambda_1) = sum_{h >= 1} P(lambda_1 >= h).

    P(lambda_1 >= h) <= 3 t^(2h) / (1 - t)^2, which bounds the omitted terms.
    """
    t = _check_t(t)
    total, error, h = 0.0, 0.0, 0
    while True:
        h += 1
        cdf = principal_cdf_lambda1(h, t)
        total += 1.0 - cdf.value
        error += cdf.error
        tail = 3.0 * t ** (2 * h + 2) / ((1.0 - t) ** 2 * (1.0 - t * t))
        if tail <= PRODUCT_EPS * max(total, 1e-300):
            return ProductValue(total, error + tail)
        if h >= MAX_FACTORS:
            raise InfeasibleScaleError(f"E(lambda_1) at t = {t} did not settle", t=t)


def m_ratio(t: Scalar) -> float:
    """E(lambda_1) / M(t, X) with X = Y the principal specialization."""
    mean = principal_mean_lambda1(t).value
    return mean / float(m_function(principal(t), t))


def principal_lambda1_table(
        t: Scalar,
        h_max: int,
        direct_size: int = 30,
) -> tuple[list[str], list[dict]]:
    """CDF of lambda_1 by the product and by direct summation, with the pmf."""
    t_float = _check_t(t)
    if h_max < 1:
        raise PreconditionError(f"h_max must be positive, got {h_max}")
    columns = ["h", "cdf", "pmf", "product_error", "direct", "gap"]
    cdfs = [principal_cdf_lambda1(h, t_float) for h in range(1, h_max + 2)]
    rows = []
    for h in range(1, h_max + 1):
        cdf = cdfs[h - 1]
        direct = principal_cdf_direct(h, t_float, direct_size)
        rows.append({
            "h": h,
            "cdf": cdf.value,
            "pmf": cdfs[h].value - cdf.value,
            "product_error": cdf.error,
            "direct": direct,
            "gap": abs(cdf.value - direct),
        })
    logger.info("principal table t=%s h_max=%d", t, h_max)
    return columns, rows
