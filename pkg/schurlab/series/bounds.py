"""series.bounds

Certified bounds on the coefficients that a truncation discards.

The bounds are Cauchy estimates: a function analytic on a disc (or annulus)
containing the circle |z| = rho has |c_n| <= max_{|z|=rho} |f| / rho^n.
The maximum is bounded by the majorant obtained by replacing every
variable with the common magnitude bound r, which gives

    prod (1 + r rho)/(1 - r rho)

for a factor (1 + x z)/(1 - x z). Evaluating at rho = 1/s with s in (r, 1)
yields |c_n| <= M s^n.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from schurlab.common.errors import DivergentSpecializationError, PreconditionError
from schurlab.common.schema import Scalar


@dataclass(frozen=True)
class TailBound:
    """n -> scale * rate^|n|, a bound on |coefficient of z^n| for n != 0.

    A zero scale marks a series that is the constant 1.
    """
    radius: Scalar
    rate: Scalar
    scale: Scalar
    order: int

    def bound_at(self, n: int) -> Scalar:
        if not self.scale:
            return self.scale
        return self.scale * self.rate ** abs(n)

    def tail_sum(self, start: int, power: int = 0) -> Scalar:
        """Bound on sum_{n >= start} n^power * bound_at(n), start >= 0."""
        if start < 0:
            raise PreconditionError(f"tail start must be nonnegative, got {start}")
        s, N = self.rate, start
        if not self.scale:
            return self.scale
        head = self.scale * s ** N
        match power:
            case 0:
                return head / (1 - s)
            case 1:
                return head * (N * (1 - s) + s) / (1 - s) ** 2
            case 2:
                return head * (
                    N * (N - (N - 1) * s) / (1 - s) ** 2
                    + s * ((N + 1) - (N - 1) * s) / (1 - s) ** 3
                )
        raise PreconditionError(f"tail sums support powers 0..2, got {power}")


def _magnitude_bound(values: Sequence[Scalar]) -> Scalar:
    r = max((abs(v) for v in values), default=Fraction(0))
    if r >= 1:
        raise DivergentSpecializationError(
            f"variables must have magnitude < 1, got {r}", radius=str(r),
        )
    return r


def _default_rate(r: Scalar) -> Scalar:
    return (r + 1) / 2


def _check_rate(r: Scalar, s: Scalar) -> None:
    if not r < s < 1:
        raise PreconditionError(f"evaluation radius s={s} must lie in ({r}, 1)")


def majorant(r: Scalar, count: int, rho: Scalar) -> Scalar:
    """((1 + r rho)/(1 - r rho))^count, the majorant of count factors at rho."""
    return ((1 + r * rho) / (1 - r * rho)) ** count


def geometric_tail_bound(
        xs: Sequence[Scalar],
        T: int,
        s: Scalar | None = None,
) -> TailBound:
    """Tail bound for the coefficients of prod (1 + x_i z)/(1 - x_i z).

    Args:
        xs: the variables, all of magnitude at most r < 1.
        T: the truncation order the bound accompanies.
        s: evaluation rate in (r, 1); defaults to (r + 1)/2.

    Returns:
        TailBound with bound_at(n) = ((1 + r/s)/(1 - r/s))^m s^n.

    Raises:
        DivergentSpecializationError: If r >= 1.
    """
    r = _magnitude_bound(xs)
    s = _default_rate(r) if s is None else s
    _check_rate(r, s)
    if not xs:
        return TailBound(r, s, Fraction(0), T)
    return TailBound(r, s, majorant(r, len(xs), 1 / s), T)


def laurent_tail_bound(
        xs: Sequence[Scalar],
        ys: Sequence[Scalar],
        T: int,
        s: Scalar | None = None,
) -> TailBound:
    """Tail bound for the Laurent coefficients of Q_X(z) Q_Y(-1/z).

    The function is analytic on r < |z| < 1/r; the estimate on |z| = 1/s
    covers n >= 0 and the one on |z| = s covers n < 0.
    """
    r = _magnitude_bound(list(xs) + list(ys))
    s = _default_rate(r) if s is None else s
    _check_rate(r, s)
    if not xs and not ys:
        return TailBound(r, s, Fraction(0), T)
    m, k = len(xs), len(ys)
    positive = majorant(r, m, 1 / s) * majorant(r, k, s)
    negative = majorant(r, m, s) * majorant(r, k, 1 / s)
    return TailBound(r, s, max(positive, negative), T)


def sqrt_rate(r: Scalar) -> float:
    """sqrt(r) as a rate, the balanced choice for products of two tails."""
    return math.sqrt(float(r)) if r > 0 else 0.5
