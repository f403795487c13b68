"""schurq.specs

Specializations of symmetric functions, given by their power sums p_k.

A specialization is exact when every p_k is rational, which holds for
finite rational variable lists, alpha and principal specializations with
rational parameters, and exponential specializations whose sqrt(xi/2) is
rational. Otherwise the values are doubles.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Literal, Sequence

from schurlab.common.errors import DivergentSpecializationError, PreconditionError
from schurlab.common.schema import APPROX, EXACT, Mode, Scalar
from schurlab.common.utils.numeric import exact_sqrt, mode_of, to_mode

SpecKind = Literal["finite_vars", "exponential", "alpha", "principal", "custom"]

FINITE_VARS: SpecKind = "finite_vars"
EXPONENTIAL: SpecKind = "exponential"
ALPHA: SpecKind = "alpha"
PRINCIPAL: SpecKind = "principal"
CUSTOM: SpecKind = "custom"


@dataclass(frozen=True)
class Decay:
    """|p_k| <= constant * ratio^k for every k >= 1.

    `last` is the largest k with a nonzero p_k when that is finite.
    """
    constant: float
    ratio: float
    last: int | None = None


@dataclass(frozen=True)
class PowerSumSpec:
    """A specialization stored as its power sums plus its defining data."""
    kind: SpecKind
    mode: Mode
    xs: tuple[Scalar, ...] = ()
    xi: Scalar | None = None
    p1: Scalar | None = None
    n: int | None = None
    alpha: Scalar | None = None
    t: Scalar | None = None
    fn: Callable[[int], Scalar] | None = field(default=None, compare=False)
    label: str = ""

    def p(self, k: int) -> Scalar:
        """The k-th power sum, k >= 1."""
        if k < 1:
            raise PreconditionError(f"power sums are indexed from 1, got {k}")
        match self.kind:
            case "finite_vars":
                return sum((x ** k for x in self.xs), to_mode(0, self.mode))
            case "exponential":
                return self.p1 if k == 1 else to_mode(0, self.mode)
            case "alpha":
                return self.n * self.alpha ** k
            case "principal":
                tk = self.t ** k
                if self.n is None:
                    return tk / (1 - tk)
                return tk * (1 - tk ** self.n) / (1 - tk)
            case "custom":
                return to_mode(self.fn(k), self.mode)
        raise PreconditionError(f"unknown specialization kind {self.kind}")

    def decay(self) -> Decay | None:
        """Geometric envelope of |p_k|, or None when unknown (custom)."""
        match self.kind:
            case "finite_vars":
                r = max((abs(float(x)) for x in self.xs), default=0.0)
                return Decay(float(len(self.xs)), r, None if self.xs else 0)
            case "exponential":
                return Decay(abs(float(self.p1)), 1.0, 1)
            case "alpha":
                return Decay(float(self.n), abs(float(self.alpha)))
            case "principal":
                t = float(self.t)
                constant = 1.0 / (1.0 - t)
                if self.n is not None:
                    constant = min(constant, float(self.n))
                return Decay(constant, t)
        return None

    @property
    def is_finite_vars(self) -> bool:
        return self.kind == FINITE_VARS

    def variables(self) -> tuple[Scalar, ...] | None:
        """An explicit variable list with the same power sums, if one exists.

        alpha(n, a) is n copies of a; a finite principal specialization is
        (t, t^2, ..., t^n).
        """
        match self.kind:
            case "finite_vars":
                return self.xs
            case "alpha":
                return (self.alpha,) * self.n
            case "principal" if self.n is not None:
                return tuple(self.t ** j for j in range(1, self.n + 1))
        return None

    def as_mode(self, mode: Mode) -> "PowerSumSpec":
        """The same specialization with doubles in place of rationals."""
        if mode == self.mode:
            return self
        if mode == EXACT:
            raise PreconditionError("cannot make an approximate specialization exact")

        def lift(value):
            return None if value is None else float(value)

        return PowerSumSpec(
            self.kind, APPROX, tuple(float(x) for x in self.xs),
            lift(self.xi), lift(self.p1), self.n, lift(self.alpha), lift(self.t),
            self.fn, self.label,
        )

    def describe(self) -> str:
        if self.label:
            return self.label
        match self.kind:
            case "finite_vars":
                return "vars(" + ",".join(str(x) for x in self.xs) + ")"
            case "exponential":
                return f"exp(xi={self.xi})"
            case "alpha":
                return f"alpha(n={self.n},a={self.alpha})"
            case "principal":
                return f"principal(t={self.t},n={'inf' if self.n is None else self.n})"
        return self.kind


def _mode_for(*values) -> Mode:
    modes = {mode_of(v) for v in values if v is not None}
    return APPROX if APPROX in modes else EXACT


def finite_vars(xs: Sequence[Scalar], mode: Mode | None = None) -> PowerSumSpec:
    """p_k = sum x_i^k for a finite list of variables."""
    mode = mode or _mode_for(*xs)
    return PowerSumSpec(FINITE_VARS, mode, tuple(to_mode(x, mode) for x in xs))


def exponential(xi: Scalar, mode: Mode | None = None) -> PowerSumSpec:
    """p_k = sqrt(xi/2) delta_{k,1}.

    Exact whenever xi is rational and xi/2 is a rational square.
    """
    if xi < 0:
        raise PreconditionError(f"xi must be nonnegative, got {xi}")
    root = None
    if mode != APPROX and not isinstance(xi, float):
        root = exact_sqrt(Fraction(xi) / 2)
    if root is not None:
        return PowerSumSpec(EXPONENTIAL, EXACT, xi=Fraction(xi), p1=root)
    if mode == EXACT:
        raise PreconditionError(f"sqrt(xi/2) is irrational for xi={xi}")
    return PowerSumSpec(EXPONENTIAL, APPROX, xi=float(xi), p1=math.sqrt(float(xi) / 2))


def alpha(n: int, a: Scalar, mode: Mode | None = None) -> PowerSumSpec:
    """p_k = n a^k, the limit of n copies of a variable a."""
    if not 0 < a < 1:
        raise PreconditionError(f"alpha must lie in (0, 1), got {a}")
    if n < 1:
        raise PreconditionError(f"n must be positive, got {n}")
    mode = mode or _mode_for(a)
    return PowerSumSpec(ALPHA, mode, n=int(n), alpha=to_mode(a, mode))


def principal(t: Scalar, n: int | None = None, mode: Mode | None = None) -> PowerSumSpec:
    """X = (t, t^2, ..., t^n), or the infinite list when n is None."""
    if not 0 < t < 1:
        raise PreconditionError(f"t must lie in (0, 1), got {t}")
    if n is not None and n < 0:
        raise PreconditionError(f"n must be nonnegative, got {n}")
    mode = mode or _mode_for(t)
    return PowerSumSpec(PRINCIPAL, mode, n=n, t=to_mode(t, mode))


def custom(fn: Callable[[int], Scalar], mode: Mode = APPROX, label: str = "custom") -> PowerSumSpec:
    """Power sums from a callable."""
    return PowerSumSpec(CUSTOM, mode, fn=fn, label=label)


def check_convergent_pair(xs: Sequence[Scalar], ys: Sequence[Scalar]) -> None:
    """Raise unless |x_i y_j| < 1 for all pairs."""
    for x in xs:
        for y in ys:
            if abs(x * y) >= 1:
                raise DivergentSpecializationError(
                    f"|x y| >= 1 for x={x}, y={y}", x=str(x), y=str(y),
                )
