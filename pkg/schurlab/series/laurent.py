"""series.laurent

Truncated formal Laurent series over exact rationals or doubles.

A series stores the coefficients of z^lo .. z^hi. Coefficients outside the
window are not known to the series; arithmetic treats them as zero, so a
caller that truncated an infinite series is responsible for choosing output
windows that stay inside the range where the result is exact.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from schurlab.common.errors import (
    ModeMismatchError,
    PreconditionError,
    WindowOverflowError,
)
from schurlab.common.schema import APPROX, EXACT, Mode, Scalar
from schurlab.common.utils.numeric import mode_of, one, to_mode, zero

logger = logging.getLogger(__name__)

# Exponents are kept within a signed 32-bit range
MAX_EXPONENT = 2**31 - 1

Window = tuple[int, int]


def _check_window(lo: int, hi: int) -> None:
    if not (-MAX_EXPONENT <= lo <= MAX_EXPONENT and -MAX_EXPONENT <= hi <= MAX_EXPONENT):
        raise WindowOverflowError(
            f"window [{lo}, {hi}] exceeds the exponent range", lo=lo, hi=hi,
        )
    if hi < lo:
        raise WindowOverflowError(f"empty window [{lo}, {hi}]", lo=lo, hi=hi)


@dataclass(frozen=True)
class TruncatedLaurentSeries:
    """Coefficients of z^n for lo <= n <= hi in one arithmetic mode."""
    lo: int
    hi: int
    coeffs: tuple[Scalar, ...]
    mode: Mode = EXACT

    def __post_init__(self) -> None:
        _check_window(self.lo, self.hi)
        if len(self.coeffs) != self.hi - self.lo + 1:
            raise PreconditionError(
                f"window [{self.lo}, {self.hi}] needs {self.hi - self.lo + 1} "
                f"coefficients, got {len(self.coeffs)}"
            )
        object.__setattr__(
            self, "coeffs", tuple(to_mode(c, self.mode) for c in self.coeffs)
        )

    @classmethod
    def from_coeffs(
            cls,
            coeffs: Sequence[Scalar],
            lo: int = 0,
            mode: Mode | None = None,
    ) -> "TruncatedLaurentSeries":
        """Build a series whose first coefficient sits at z^lo.

        The mode is inferred from the coefficients when not given; an empty
        or all-integer list is exact.
        """
        if mode is None:
            modes = {mode_of(c) for c in coeffs}
            if len(modes) > 1:
                raise ModeMismatchError("coefficients mix exact and approximate scalars")
            mode = modes.pop() if modes else EXACT
        if not coeffs:
            coeffs = [zero(mode)]
        return cls(lo, lo + len(coeffs) - 1, tuple(coeffs), mode)

    @classmethod
    def constant(cls, value: Scalar = 1, mode: Mode = EXACT) -> "TruncatedLaurentSeries":
        return cls(0, 0, (value,), mode)

    @property
    def window(self) -> Window:
        return self.lo, self.hi

    @property
    def is_power_series(self) -> bool:
        return self.lo == 0

    def coeff(self, n: int) -> Scalar:
        """Coefficient of z^n; zero outside the stored window."""
        if self.lo <= n <= self.hi:
            return self.coeffs[n - self.lo]
        return zero(self.mode)

    def restrict(self, lo: int, hi: int) -> "TruncatedLaurentSeries":
        """Re-window the series, padding with zeros where needed."""
        _check_window(lo, hi)
        return TruncatedLaurentSeries(
            lo, hi, tuple(self.coeff(n) for n in range(lo, hi + 1)), self.mode,
        )

    def as_mode(self, mode: Mode) -> "TruncatedLaurentSeries":
        """Copy into another mode. Only exact to approx is allowed."""
        if mode == self.mode:
            return self
        if self.mode == APPROX:
            raise ModeMismatchError("cannot promote approximate coefficients to exact")
        return TruncatedLaurentSeries(
            self.lo, self.hi, tuple(float(c) for c in self.coeffs), APPROX,
        )

    def __iter__(self):
        return iter(zip(range(self.lo, self.hi + 1), self.coeffs))


def _require_same_mode(a: TruncatedLaurentSeries, b: TruncatedLaurentSeries) -> Mode:
    if a.mode != b.mode:
        raise ModeMismatchError(
            f"cannot combine {a.mode} and {b.mode} series",
            left=a.mode, right=b.mode,
        )
    return a.mode


def _convolve(
        a: Sequence[Scalar],
        b: Sequence[Scalar],
        mode: Mode,
) -> list[Scalar]:
    if mode == APPROX:
        return np.convolve(np.asarray(a, dtype=float), np.asarray(b, dtype=float)).tolist()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] += ai * bj
    return out


def series_mul(
        a: TruncatedLaurentSeries,
        b: TruncatedLaurentSeries,
        window: Window | None = None,
) -> TruncatedLaurentSeries:
    """Product of two series restricted to an output window.

    The default window is the full product window
    [a.lo + b.lo, a.hi + b.hi]; every coefficient in it is the sum of
    a_k * b_(n-k) over the stored ranges.

    Raises:
        ModeMismatchError: If the series are in different modes.
        WindowOverflowError: If the exponents leave the supported range.
    """
    mode = _require_same_mode(a, b)
    full_lo, full_hi = a.lo + b.lo, a.hi + b.hi
    _check_window(full_lo, full_hi)
    lo, hi = window if window is not None else (full_lo, full_hi)
    _check_window(lo, hi)
    full = TruncatedLaurentSeries(
        full_lo, full_hi, tuple(_convolve(a.coeffs, b.coeffs, mode)), mode,
    )
    if (lo, hi) == (full_lo, full_hi):
        return full
    return full.restrict(lo, hi)


def series_add(
        a: TruncatedLaurentSeries,
        b: TruncatedLaurentSeries,
) -> TruncatedLaurentSeries:
    """Sum over the union of the two windows."""
    mode = _require_same_mode(a, b)
    lo, hi = min(a.lo, b.lo), max(a.hi, b.hi)
    return TruncatedLaurentSeries(
        lo, hi, tuple(a.coeff(n) + b.coeff(n) for n in range(lo, hi + 1)), mode,
    )


def series_scale(a: TruncatedLaurentSeries, c: Scalar) -> TruncatedLaurentSeries:
    """Multiply every coefficient by a scalar of the series' mode."""
    c = to_mode(c, a.mode)
    return TruncatedLaurentSeries(a.lo, a.hi, tuple(c * x for x in a.coeffs), a.mode)


def series_neg(a: TruncatedLaurentSeries) -> TruncatedLaurentSeries:
    return TruncatedLaurentSeries(a.lo, a.hi, tuple(-x for x in a.coeffs), a.mode)


def series_exp(a: TruncatedLaurentSeries, T: int) -> TruncatedLaurentSeries:
    """exp(a) through z^T for a series without constant or negative terms.

    Uses n e_n = sum_{k=1..n} k a_k e_(n-k) with e_0 = 1. Coefficients of a
    beyond its window are taken as zero.

    Raises:
        PreconditionError: If a has a nonzero coefficient at some z^n, n <= 0,
            or T is negative.
    """
    if T < 0:
        raise PreconditionError(f"truncation order must be nonnegative, got {T}")
    for n, c in a:
        if n <= 0 and c:
            raise PreconditionError(
                f"exp needs a series without constant or negative terms; "
                f"coefficient of z^{n} is {c}",
                exponent=n,
            )
    mode = a.mode
    ka = [zero(mode)] + [k * a.coeff(k) for k in range(1, T + 1)]
    nonzero = [k for k in range(1, T + 1) if ka[k]]
    e = [one(mode)] + [zero(mode)] * T
    for n in range(1, T + 1):
        acc = zero(mode)
        for k in nonzero:
            if k > n:
                break
            acc += ka[k] * e[n - k]
        e[n] = acc / n
    return TruncatedLaurentSeries(0, T, tuple(e), mode)


def series_inverse(a: TruncatedLaurentSeries, T: int) -> TruncatedLaurentSeries:
    """Multiplicative inverse of a power series with a_0 != 0, through z^T.

    Raises:
        PreconditionError: If a is not a power series or a_0 is zero.
    """
    if a.lo < 0 and any(c for n, c in a if n < 0):
        raise PreconditionError("inverse needs a power series")
    a0 = a.coeff(0)
    if not a0:
        raise PreconditionError("inverse needs a nonzero constant term")
    mode = a.mode
    b = [one(mode) / a0] + [zero(mode)] * T
    for n in range(1, T + 1):
        acc = zero(mode)
        for k in range(1, min(n, a.hi) + 1):
            ak = a.coeff(k)
            if ak:
                acc += ak * b[n - k]
        b[n] = -acc / a0
    return TruncatedLaurentSeries(0, T, tuple(b), mode)
