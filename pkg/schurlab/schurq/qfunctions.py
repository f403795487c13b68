"""schurq.qfunctions

Schur Q- and P-functions of strict partitions under a specialization,
through the pfaffian of the matrix of two-row functions Q_(r,s).
"""

import logging
import math
from fractions import Fraction
from math import factorial
from typing import Sequence

from schurlab.common.errors import DivergentSpecializationError, PreconditionError
from schurlab.common.schema import APPROX, EXACT, Scalar
from schurlab.common.utils.numeric import exact_sqrt, one, to_mode, zero
from schurlab.partitions import StrictPartition, g_formula, iter_strict
from schurlab.series import TruncatedLaurentSeries, product_form, series_exp

from .pfaffian import SkewMatrix, pfaffian
from .specs import EXPONENTIAL, PowerSumSpec, check_convergent_pair, finite_vars

logger = logging.getLogger(__name__)

# Sums of p_n(X) p_n(Y) stop once the certified remainder is below this
SUM_TOLERANCE = 1e-17
MAX_SUM_TERMS = 100_000


def q_coeffs(spec: PowerSumSpec, T: int) -> tuple[Scalar, ...]:
    """q_0 .. q_T, the coefficients of exp(sum_{n odd} (2/n) p_n z^n)."""
    if T < 0:
        raise PreconditionError(f"truncation order must be nonnegative, got {T}")
    mode = spec.mode
    if spec.kind == EXPONENTIAL:
        # exp of a single linear term
        base = 2 * spec.p1
        return tuple(to_mode(base ** n, mode) / factorial(n) for n in range(T + 1))
    exponent = [zero(mode)] * (T + 1)
    for n in range(1, T + 1, 2):
        exponent[n] = 2 * spec.p(n) / n
    series = TruncatedLaurentSeries(0, T, tuple(exponent), mode)
    return series_exp(series, T).coeffs


def q_rs(r: int, s: int, q: Sequence[Scalar]) -> Scalar:
    """Q_(r,s) = q_r q_s + 2 sum_{i=1..s} (-1)^i q_(r+i) q_(s-i) for r > s >= 0,
    extended by Q_(r,s) = -Q_(s,r).

    Raises:
        PreconditionError: If q does not reach order r + s, or an index
            is negative.
    """
    if r < 0 or s < 0:
        raise PreconditionError(f"Q_(r,s) needs r, s >= 0, got ({r}, {s})")
    if r == s:
        return q[0] - q[0]  # zero in the mode of q
    if r < s:
        return -q_rs(s, r, q)
    if len(q) <= r + s:
        raise PreconditionError(
            f"Q_({r},{s}) needs q through order {r + s}, have {len(q) - 1}",
        )
    total = q[r] * q[s]
    for i in range(1, s + 1):
        term = 2 * q[r + i] * q[s - i]
        total += -term if i % 2 else term
    return total


def m_matrix(partition: StrictPartition, q: Sequence[Scalar], mode) -> SkewMatrix:
    """The matrix (Q_(l_i, l_j)), padded with a zero part to even length."""
    parts = partition.parts + ((0,) if partition.length % 2 else ())
    return SkewMatrix.from_function(
        len(parts), lambda i, j: q_rs(parts[i], parts[j], q), mode,
    )


def schur_q_from_coeffs(partition: StrictPartition, q: Sequence[Scalar], mode) -> Scalar:
    if not partition:
        return one(mode)
    return pfaffian(m_matrix(partition, q, mode))


def schur_q(partition: StrictPartition, spec: PowerSumSpec) -> Scalar:
    """Q_lambda = Pf(M_lambda)."""
    needed = sum(partition.parts[:2])
    q = q_coeffs(spec, needed)
    return schur_q_from_coeffs(partition, q, spec.mode)


def schur_p(partition: StrictPartition, spec: PowerSumSpec) -> Scalar:
    """P_lambda = 2^(-l) Q_lambda."""
    value = schur_q(partition, spec)
    if spec.mode == EXACT:
        return value / 2 ** partition.length
    return value / float(2 ** partition.length)


def _odd_power_sum_product(specX: PowerSumSpec, specY: PowerSumSpec) -> float:
    """sum_{n odd} (2/n) p_n(X) p_n(Y) in doubles, to a certified remainder."""
    dX, dY = specX.decay(), specY.decay()
    last = None
    if dX is not None and dX.last is not None:
        last = dX.last
    if dY is not None and dY.last is not None:
        last = dY.last if last is None else min(last, dY.last)
    total = 0.0
    if last is not None:
        for n in range(1, last + 1, 2):
            total += 2.0 * float(specX.p(n)) * float(specY.p(n)) / n
        return total
    if dX is None or dY is None:
        raise DivergentSpecializationError(
            "cannot certify the power-sum series of a custom specialization",
        )
    rho = dX.ratio * dY.ratio
    if rho >= 1:
        raise DivergentSpecializationError(
            f"power-sum series diverges (ratio {rho})", ratio=rho,
        )
    constant = 2.0 * dX.constant * dY.constant
    for n in range(1, MAX_SUM_TERMS, 2):
        total += 2.0 * float(specX.p(n)) * float(specY.p(n)) / n
        if constant * rho ** (n + 1) / (1 - rho) < SUM_TOLERANCE * max(abs(total), 1.0):
            return total
    raise DivergentSpecializationError("power-sum series converges too slowly")


def z_ss(specX: PowerSumSpec, specY: PowerSumSpec) -> Scalar:
    """Normalising constant sum_lambda Q_lambda(X) P_lambda(Y).

    Exact product prod (1 + x y)/(1 - x y) when both sides have variable lists,
    exp(sum_{n odd} (2/n) p_n(X) p_n(Y)) in doubles otherwise.

    Raises:
        DivergentSpecializationError: If some |x_i y_j| >= 1 or the
            power-sum series cannot be certified.
    """
    xs, ys = specX.variables(), specY.variables()
    if xs is not None and ys is not None:
        check_convergent_pair(xs, ys)
        mode = APPROX if APPROX in (specX.mode, specY.mode) else EXACT
        value = one(mode)
        for x in xs:
            for y in ys:
                c = to_mode(x, mode) * to_mode(y, mode)
                value *= (1 + c) / (1 - c)
        return value
    return math.exp(_odd_power_sum_product(specX, specY))


def cauchy_graded(
        xs: Sequence[Scalar],
        ys: Sequence[Scalar],
        d: int,
) -> tuple[Scalar, Scalar]:
    """Both sides of the degree-d Cauchy identity.

    Returns:
        (sum_{|lambda| = d} Q_lambda(X) P_lambda(Y),
         coefficient of u^d in prod (1 + x y u)/(1 - x y u))
    """
    specX, specY = finite_vars(xs), finite_vars(ys)
    mode = APPROX if APPROX in (specX.mode, specY.mode) else EXACT
    qx, qy = q_coeffs(specX, d), q_coeffs(specY, d)
    lhs = zero(mode)
    for lam in iter_strict(d):
        if lam.length > min(len(xs), len(ys)):
            continue
        lhs += schur_q_from_coeffs(lam, qx, mode) * schur_q_from_coeffs(lam, qy, mode) \
            / 2 ** lam.length
    products = [x * y for x in specX.xs for y in specY.xs]
    rhs = product_form(products, d, mode=mode).coeff(d)
    return lhs, rhs


def q_exponential_closed_form(partition: StrictPartition, xi: Scalar) -> Scalar:
    """(2 xi)^(|lambda|/2) g^lambda / |lambda|!, exact when sqrt(2 xi) is rational."""
    root = exact_sqrt(Fraction(2 * xi)) if not isinstance(xi, float) else None
    size = partition.size
    if root is None:
        return math.sqrt(2 * float(xi)) ** size * g_formula(partition) / factorial(size)
    return root ** size * Fraction(g_formula(partition), factorial(size))
