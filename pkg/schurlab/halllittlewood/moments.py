"""halllittlewood.moments

The Hall-Littlewood measure Q_lambda(X; t) P_lambda(Y; t) / Z with

    Z = prod_{i,j} (1 - t x_i y_j) / (1 - x_i y_j),

and the first two moments of |lambda|:

    E|lambda|   = sum_k (1 - t^k) p_k(X) p_k(Y),
    Var|lambda| = sum_k k (1 - t^k) p_k(X) p_k(Y).

For finite variable lists both sums close up per pair c = x_i y_j, and the
direct summation over partitions serves as the oracle.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from schurlab.common.errors import InfeasibleScaleError, PreconditionError
from schurlab.common.schema import EXACT, Rational, Scalar
from schurlab.common.utils.numeric import to_mode
from schurlab.partitions import enumerate_partitions
from schurlab.schurq import PowerSumSpec
from schurlab.schurq.specs import EXPONENTIAL, check_convergent_pair
from schurlab.series import geometric_tail_bound
from schurlab.series.bounds import sqrt_rate

from .polynomials import hl_p, hl_q

logger = logging.getLogger(__name__)

BRUTE_MAX_VARIABLES = 3
BRUTE_MAX_CUTOFF = 30
SERIES_TOLERANCE = 1e-17
MAX_SERIES_TERMS = 100_000


@dataclass(frozen=True)
class HLConfig:
    """Parameters of a Hall-Littlewood measure with finite variable lists.

    Attributes:
        t: the Hall-Littlewood parameter in [-1, 1].
        xs: the variables of Q.
        ys: the variables of P.
        cutoff: largest |lambda| in direct summations.
    """
    t: Rational
    xs: tuple[Rational, ...] = ()
    ys: tuple[Rational, ...] = ()
    cutoff: int = 25

    def __post_init__(self) -> None:
        t = to_mode(self.t, EXACT)
        xs = tuple(to_mode(x, EXACT) for x in self.xs)
        ys = tuple(to_mode(y, EXACT) for y in self.ys)
        if not -1 <= t <= 1:
            raise PreconditionError(f"t must lie in [-1, 1], got {t}")
        if self.cutoff < 0:
            raise PreconditionError(f"cutoff must be nonnegative, got {self.cutoff}")
        check_convergent_pair(xs, ys)
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "ys", ys)

    @property
    def products(self) -> list[Fraction]:
        return [x * y for x in self.xs for y in self.ys]


class SizeMoments(NamedTuple):
    """Mean and variance of |lambda| with a bound on their errors."""
    mean: Scalar
    variance: Scalar
    error: float


def z_hl(cfg: HLConfig) -> Fraction:
    """The Cauchy product prod (1 - t x y) / (1 - x y)."""
    z = Fraction(1)
    for c in cfg.products:
        z *= (1 - cfg.t * c) / (1 - c)
    return z


def _pair_mean(c: Scalar, t: Scalar) -> Scalar:
    # sum_k (1 - t^k) c^k
    return c / (1 - c) - t * c / (1 - t * c)


def _pair_variance(c: Scalar, t: Scalar) -> Scalar:
    # sum_k k (1 - t^k) c^k
    return c / (1 - c) ** 2 - t * c / (1 - t * c) ** 2


def mean_size(cfg: HLConfig) -> Fraction:
    return sum((_pair_mean(c, cfg.t) for c in cfg.products), Fraction(0))


def var_size(cfg: HLConfig) -> Fraction:
    return sum((_pair_variance(c, cfg.t) for c in cfg.products), Fraction(0))


def graded_weight(cfg: HLConfig, N: int) -> Fraction:
    """sum over lambda of size N of Q_lambda(X; t) P_lambda(Y; t)."""
    length = min(len(cfg.xs), len(cfg.ys))
    return sum(
        (hl_q(lam, cfg.xs, cfg.t) * hl_p(lam, cfg.ys, cfg.t)
         for lam in enumerate_partitions(N, max_length=length)),
        Fraction(0),
    )


def brute_moments(cfg: HLConfig) -> SizeMoments:
    """Mean and variance of |lambda| by summing the measure over |lambda| <= cutoff.

    The error bound majorizes the omitted graded sums by the coefficients
    of prod (1 + c u) / (1 - c u) over the pairs c = x_i y_j.

    Raises:
        InfeasibleScaleError: Beyond BRUTE_MAX_VARIABLES variables or
            BRUTE_MAX_CUTOFF.
    """
    if max(len(cfg.xs), len(cfg.ys)) > BRUTE_MAX_VARIABLES:
        raise InfeasibleScaleError(
            f"direct summation is limited to {BRUTE_MAX_VARIABLES} variables per side",
        )
    if cfg.cutoff > BRUTE_MAX_CUTOFF:
        raise InfeasibleScaleError(
            f"cutoff {cfg.cutoff} exceeds {BRUTE_MAX_CUTOFF}", cutoff=cfg.cutoff,
        )
    products = cfg.products
    if not products:
        return SizeMoments(Fraction(0), Fraction(0), 0.0)
    z = z_hl(cfg)
    first = second = Fraction(0)
    for N in range(1, cfg.cutoff + 1):
        weight = graded_weight(cfg, N)
        first += N * weight
        second += N * N * weight
    mean = first / z
    variance = second / z - mean * mean
    magnitudes = [abs(c) for c in products]
    bound = geometric_tail_bound(magnitudes, cfg.cutoff, sqrt_rate(max(magnitudes)))
    mean_tail = float(bound.tail_sum(cfg.cutoff + 1, 1)) / float(z)
    second_tail = float(bound.tail_sum(cfg.cutoff + 1, 2)) / float(z)
    variance_tail = second_tail + mean_tail * (2.0 * abs(float(mean)) + mean_tail)
    logger.debug("brute moments t=%s cutoff=%d: mean %s", cfg.t, cfg.cutoff, float(mean))
    return SizeMoments(mean, variance, max(mean_tail, variance_tail))


def _check_t(t: Scalar) -> None:
    if not -1 <= t <= 1:
        raise PreconditionError(f"t must lie in [-1, 1], got {t}")


def _series(term, rho: float, constant: float, power: int) -> tuple[float, float]:
    """sum_k k^power term(k), where |term(k)| <= 2 constant rho^k, and the
    bound on the omitted tail.
    """
    if rho >= 1:
        raise PreconditionError(f"power sums do not decay geometrically (ratio {rho})")
    total, k = 0.0, 0
    while True:
        k += 1
        total += k ** power * term(k)
        tail = 2.0 * constant * rho ** (k + 1) * (
            1.0 / (1.0 - rho) if not power
            else ((k + 1) * (1.0 - rho) + rho) / (1.0 - rho) ** 2
        )
        if tail <= SERIES_TOLERANCE * max(abs(total), 1.0) or constant == 0:
            return total, tail
        if k >= MAX_SERIES_TERMS:
            raise InfeasibleScaleError(
                f"power-sum series did not settle in {MAX_SERIES_TERMS} terms",
            )


def size_moments_from_power_sums(
        specX: PowerSumSpec,
        specY: PowerSumSpec,
        t: Scalar,
) -> SizeMoments:
    """E|lambda| and Var|lambda| for any pair of specializations.

    Variable lists close up exactly; an exponential side keeps only k = 1;
    anything else is summed in doubles until the geometric tail is
    negligible.
    """
    _check_t(t)
    xs, ys = specX.variables(), specY.variables()
    if xs is not None and ys is not None:
        check_convergent_pair(xs, ys)
        products = [x * y for x in xs for y in ys]
        zero = Fraction(0) if all(isinstance(c, (int, Fraction)) for c in products) \
            and isinstance(t, (int, Fraction)) else 0.0
        mean = sum((_pair_mean(c, t) for c in products), zero)
        variance = sum((_pair_variance(c, t) for c in products), zero)
        return SizeMoments(mean, variance, 0.0)
    if EXPONENTIAL in (specX.kind, specY.kind):
        value = (1 - t) * specX.p(1) * specY.p(1)
        return SizeMoments(value, value, 0.0)
    dX, dY = specX.decay(), specY.decay()
    if dX is None or dY is None:
        raise PreconditionError("moments need a known decay of the power sums")
    t = float(t)

    def term(k: int) -> float:
        return (1.0 - t ** k) * float(specX.p(k)) * float(specY.p(k))

    ratio, constant = dX.ratio * dY.ratio, dX.constant * dY.constant
    mean, mean_tail = _series(term, ratio, constant, 0)
    variance, variance_tail = _series(term, ratio, constant, 1)
    return SizeMoments(mean, variance, max(mean_tail, variance_tail))


def m_function(spec: PowerSumSpec, t: Scalar) -> Scalar:
    """M(t, X) = 2 sum_k (1 - t^k) p_k(X)."""
    _check_t(t)
    xs = spec.variables()
    if xs is not None:
        if any(abs(x) >= 1 for x in xs):
            raise PreconditionError("M(t, X) needs variables of magnitude < 1")
        return 2 * sum((_pair_mean(x, t) for x in xs), 0 * t)
    if spec.kind == EXPONENTIAL:
        return 2 * (1 - t) * spec.p1
    decay = spec.decay()
    if decay is None:
        raise PreconditionError("M(t, X) needs a known decay of the power sums")
    t = float(t)
    value, _ = _series(lambda k: (1.0 - t ** k) * float(spec.p(k)), decay.ratio, decay.constant, 0)
    return 2.0 * value


def size_moments_table(cfg: HLConfig) -> tuple[list[str], list[dict]]:
    """Closed forms against direct summation for one configuration."""
    brute = brute_moments(cfg)
    mean, variance = mean_size(cfg), var_size(cfg)
    row = {
        "t": cfg.t,
        "xs": list(cfg.xs),
        "ys": list(cfg.ys),
        "cutoff": cfg.cutoff,
        "mean": mean,
        "mean_brute": brute.mean,
        "variance": variance,
        "variance_brute": brute.variance,
        "tail": brute.error,
        "agree": math.isclose(float(mean), float(brute.mean), abs_tol=brute.error + 1e-12)
        and math.isclose(float(variance), float(brute.variance), abs_tol=brute.error + 1e-12),
    }
    return list(row), [row]

