"""correlation.kernel

The correlation kernel of the shifted Schur measure.

J(z; X, Y) = Q_X(z) Q_Y(-1/z) = sum_n a_n z^n, and for nonzero u, v

    K(u, v) = eps(u, v) * [z^u w^v] (1/2) J(z) J(w) (z - w)/(z + w),

with (z - w)/(z + w) expanded in powers of w/z, i.e.

    K(u, v) = eps(u, v) (1/2) (a_u a_v + 2 sum_{k>=1} (-1)^k a_(u+k) a_(v-k)).

Every value travels with a certified bound on the truncation error.
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, NamedTuple

import numpy as np

from schurlab.common.errors import (
    CertificationError,
    ModeMismatchError,
    PreconditionError,
    WindowOverflowError,
)
from schurlab.common.schema import APPROX, EXACT, Mode, Scalar
from schurlab.schurq import PowerSumSpec, SkewMatrix, q_coeffs
from schurlab.schurq.specs import EXPONENTIAL
from schurlab.series import TruncatedLaurentSeries, geometric_tail_bound

from .bessel import bessel_j_table
from .envelopes import BesselEnvelope, GeometricEnvelope

logger = logging.getLogger(__name__)

DEFAULT_ORDER = 60
# q coefficients are computed this many times deeper than the J window
CONVOLUTION_DEPTH = 3
EPS = np.finfo(float).eps
# allowance for the rounding of a normalised Miller table
MILLER_ROUNDING = 1e-13

BESSEL = "bessel"
CONVOLUTION = "convolution"


class KernelValue(NamedTuple):
    value: Scalar
    error: float


@dataclass(frozen=True)
class JTable:
    """Coefficients a_n on [-T, T], their error bounds, and an envelope."""
    coeffs: TruncatedLaurentSeries
    errors: tuple[float, ...]
    envelope: GeometricEnvelope | BesselEnvelope

    def a(self, n: int) -> Scalar:
        return self.coeffs.coeff(n)

    def error(self, n: int) -> float:
        return self.errors[n - self.coeffs.lo]


@dataclass(frozen=True)
class CorrelationQuery:
    """A finite set k_1 > ... > k_N of positive integers."""
    ks: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        ks = tuple(int(k) for k in self.ks)
        if any(k < 1 for k in ks):
            raise PreconditionError(f"correlation points must be positive: {ks}")
        if len(set(ks)) != len(ks):
            raise PreconditionError(f"correlation points must be distinct: {ks}")
        object.__setattr__(self, "ks", tuple(sorted(ks, reverse=True)))

    def __len__(self) -> int:
        return len(self.ks)


def as_query(points: "CorrelationQuery | Iterable[int]") -> CorrelationQuery:
    if isinstance(points, CorrelationQuery):
        return points
    return CorrelationQuery(tuple(points))


def _has_no_variables(spec: PowerSumSpec) -> bool:
    if spec.kind == EXPONENTIAL:
        return not spec.p1
    xs = spec.variables()
    return xs is not None and not any(xs)


@dataclass(frozen=True)
class KernelSpec:
    """Two specializations plus the truncation and arithmetic choices.

    Attributes:
        T: the window [-T, T] of J coefficients kept.
        mode: exact rationals or doubles.
        k_tail: depth of the inner kernel sum; defaults to T // 2.
        r: common bound on the variable magnitudes, derived when omitted.
        route: "bessel" or "convolution"; chosen automatically when empty.
    """
    specX: PowerSumSpec
    specY: PowerSumSpec
    T: int = DEFAULT_ORDER
    mode: Mode = EXACT
    k_tail: int | None = None
    r: Scalar | None = None
    route: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if self.T < 1:
            raise PreconditionError(f"truncation order must be positive, got {self.T}")
        if self.k_tail is None:
            object.__setattr__(self, "k_tail", self.T // 2)
        if not 0 <= self.k_tail < self.T:
            raise PreconditionError(f"inner depth {self.k_tail} must lie in [0, {self.T})")
        for spec in (self.specX, self.specY):
            if self.mode == EXACT and spec.mode != EXACT:
                raise ModeMismatchError(
                    f"exact kernel requested for approximate {spec.describe()}",
                )
            if spec.kind != EXPONENTIAL and spec.variables() is None:
                raise PreconditionError(
                    f"kernels support variable lists and exponential "
                    f"specializations, not {spec.describe()}",
                )
        if self.r is None:
            xs = (self.specX.variables() or ()) + (self.specY.variables() or ())
            object.__setattr__(self, "r", max((abs(x) for x in xs), default=Fraction(0)))
        if self.r >= 1:
            raise PreconditionError(f"variables must have magnitude < 1, got r={self.r}")
        bessel = (
            self.mode == APPROX
            and self.specX.kind == EXPONENTIAL
            and self.specY.kind == EXPONENTIAL
            and float(self.specX.p1) == float(self.specY.p1)
        )
        if self.route == BESSEL and not bessel:
            raise PreconditionError(
                "the Bessel route needs two equal exponential specializations "
                "in approximate mode",
            )
        if self.route not in (BESSEL, CONVOLUTION):
            object.__setattr__(self, "route", BESSEL if bessel else CONVOLUTION)

    @property
    def reach(self) -> int:
        """Largest |u| a kernel entry may use."""
        return self.T - self.k_tail

    @cached_property
    def table(self) -> JTable:
        if self.route == BESSEL:
            return _bessel_table(self)
        return _convolution_table(self)


def _bessel_table(ks: KernelSpec) -> JTable:
    x = 4.0 * float(ks.specX.p1)  # 2 sqrt(2 xi) with p1 = sqrt(xi/2)
    values = bessel_j_table(x, ks.T)
    coeffs = [
        (-values[-n] if n % 2 else values[-n]) if n < 0 else values[n]
        for n in range(-ks.T, ks.T + 1)
    ]
    logger.debug("bessel table x=%.6g T=%d", x, ks.T)
    series = TruncatedLaurentSeries(-ks.T, ks.T, tuple(float(c) for c in coeffs), APPROX)
    return JTable(series, (MILLER_ROUNDING,) * (2 * ks.T + 1), BesselEnvelope(x))


def _q_envelope(spec: PowerSumSpec, rate: float) -> float:
    """C with |q_k| <= C rate^k for every k >= 0 (Cauchy estimate on |z| = 1/rate)."""
    if _has_no_variables(spec):
        return 1.0
    if spec.kind == EXPONENTIAL:
        return math.exp(2.0 * abs(float(spec.p1)) / rate)
    xs = spec.variables()
    return float(geometric_tail_bound(xs, 0, rate).scale)


def _convolution_table(ks: KernelSpec) -> JTable:
    T, mode = ks.T, ks.mode
    depth = CONVOLUTION_DEPTH * T
    specX, specY = ks.specX.as_mode(mode), ks.specY.as_mode(mode)
    qx = q_coeffs(specX, depth)
    # Q_Y(-w) has coefficients (-1)^m q_m
    qy = [c if m % 2 == 0 else -c for m, c in enumerate(q_coeffs(specY, depth))]
    rate = math.sqrt(float(ks.r)) if ks.r > 0 else 0.5
    cx, cy = _q_envelope(specX, rate), _q_envelope(specY, rate)
    finite = _has_no_variables(specX) or _has_no_variables(specY)
    if mode == APPROX:
        full = np.convolve(np.asarray(qx, dtype=float), np.asarray(qy[::-1], dtype=float))
        magnitude = np.convolve(np.abs(qx), np.abs(qy[::-1]))
        coeffs = [float(full[n + depth]) for n in range(-T, T + 1)]
        rounding = [float(magnitude[n + depth]) * depth * EPS for n in range(-T, T + 1)]
    else:
        coeffs, rounding = [], [0.0] * (2 * T + 1)
        for n in range(-T, T + 1):
            total = Fraction(0)
            for m in range(max(0, -n), depth - max(n, 0) + 1):
                total += qx[n + m] * qy[m]
            coeffs.append(total)
    errors = []
    for i, n in enumerate(range(-T, T + 1)):
        if finite:
            errors.append(rounding[i])
            continue
        last = depth - max(n, 0)
        tail = cx * cy * rate ** n * rate ** (2 * (last + 1)) / (1.0 - rate ** 2)
        errors.append(tail + rounding[i])
    envelope = GeometricEnvelope(cx * cy / (1.0 - rate ** 2), rate)
    logger.debug(
        "convolution table T=%d depth=%d rate=%.4g max error=%.3g",
        T, depth, rate, max(errors),
    )
    return JTable(TruncatedLaurentSeries(-T, T, tuple(coeffs), mode), tuple(errors), envelope)


def j_coeffs(ks: KernelSpec) -> TruncatedLaurentSeries:
    """Laurent coefficients of J(z; X, Y) on the window [-T, T]."""
    return ks.table.coeffs


def epsilon(u: int, v: int) -> int:
    """The sign eps(u, v).

    1 for u, v > 0; (-1)^v for u > 0 > v; (-1)^(u+v) for u, v < 0.
    For u < 0 < v the sign is (-1)^u, the value for which
    K(u, v) = -K(v, u).
    """
    if u == 0 or v == 0:
        raise PreconditionError(f"eps is defined for nonzero arguments, got ({u}, {v})")
    if u > 0 and v > 0:
        return 1
    if u > 0 > v:
        return -1 if v % 2 else 1
    if u < 0 and v < 0:
        return -1 if (u + v) % 2 else 1
    return -1 if u % 2 else 1


def kernel_entry(
        ks: KernelSpec,
        u: int,
        v: int,
        tolerance: float | None = None,
) -> KernelValue:
    """K(u, v) with a certified error bound.

    Raises:
        PreconditionError: If u or v is zero.
        WindowOverflowError: If |u| or |v| exceeds T - k_tail.
        CertificationError: If a tolerance is given and the bound exceeds it.
    """
    if u == 0 or v == 0:
        raise PreconditionError(f"kernel arguments must be nonzero, got ({u}, {v})")
    if u < 0 < v:
        value, error = kernel_entry(ks, v, u, tolerance)
        return KernelValue(-value, error)
    if max(abs(u), abs(v)) > ks.reach:
        raise WindowOverflowError(
            f"kernel arguments ({u}, {v}) exceed T - k_tail = {ks.reach}; raise T",
            u=u, v=v, T=ks.T,
        )
    table, depth = ks.table, ks.k_tail
    a, e = table.a, table.error
    half = Fraction(1, 2) if table.coeffs.mode == EXACT else 0.5
    total = a(u) * a(v)
    spread = abs(float(total))
    error = e(u) * abs(float(a(v))) + abs(float(a(u))) * e(v) + e(u) * e(v)
    for k in range(1, depth + 1):
        left, right = a(u + k), a(v - k)
        term = 2 * left * right
        total += -term if k % 2 else term
        spread += abs(float(term))
        error += 2.0 * (
            e(u + k) * abs(float(right)) + abs(float(left)) * e(v - k)
            + e(u + k) * e(v - k)
        )
    error += 2.0 * table.envelope.pair_tail(u, v, depth)
    error *= 0.5
    if table.coeffs.mode == APPROX:
        error += 2.0 * (depth + 2) * EPS * spread
    value = epsilon(u, v) * half * total
    if tolerance is not None and error > tolerance:
        raise CertificationError(
            f"K({u}, {v}) is certified only to {error:.3g} > {tolerance:.3g}",
            error=error, tolerance=tolerance,
        )
    return KernelValue(value, error)


def _matrix_arguments(points: tuple[int, ...]) -> list[int]:
    """k_1, ..., k_N, -k_N, ..., -k_1: position p of the 2N x 2N matrix."""
    return list(points) + [-k for k in reversed(points)]


def assemble_with_errors(
        ks: KernelSpec,
        points: "CorrelationQuery | Iterable[int]",
) -> tuple[SkewMatrix, list[list[float]]]:
    """The matrix M(A) and the error bounds of its upper-triangle entries."""
    query = as_query(points)
    args = _matrix_arguments(query.ks)
    dim = len(args)
    errors = [[0.0] * dim for _ in range(dim)]

    def entry(i: int, j: int) -> Scalar:
        value, error = kernel_entry(ks, args[i], args[j])
        errors[i][j] = error
        return value

    matrix = SkewMatrix.from_function(dim, entry, ks.table.coeffs.mode)
    return matrix, errors


def assemble_m(ks: KernelSpec, points: "CorrelationQuery | Iterable[int]") -> SkewMatrix:
    """M(A): K(k_i, k_j) for i < j <= N, K(k_i, -k_(2N-j+1)) for i <= N < j,
    K(-k_(2N-i+1), -k_(2N-j+1)) for N < i < j.
    """
    return assemble_with_errors(ks, points)[0]


def kernel_spec(
        specX: PowerSumSpec,
        specY: PowerSumSpec,
        T: int = DEFAULT_ORDER,
        mode: Mode | None = None,
        k_tail: int | None = None,
) -> KernelSpec:
    """KernelSpec with the mode defaulting to the specializations' own."""
    if mode is None:
        mode = APPROX if APPROX in (specX.mode, specY.mode) else EXACT
    return KernelSpec(specX, specY, T, mode, k_tail)
