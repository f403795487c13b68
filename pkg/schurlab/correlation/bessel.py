"""correlation.bessel

Bessel functions J_n(x) of integer order.

Tables are produced by Miller's downward recurrence

    J_(n-1)(x) = (2n/x) J_n(x) - J_(n+1)(x),

started far above the transition region n ~ x and normalised by
J_0 + 2 sum_k J_(2k) = 1. The ascending series, summed in extended
precision, is kept as an oracle for moderate arguments.
"""

import math

import mpmath
import numpy as np

from schurlab.common.errors import PreconditionError

RESCALE_AT = 1e250
SERIES_MAX_ARGUMENT = 10.0


def miller_start(x: float, n_max: int) -> int:
    """Even starting order for the downward recurrence."""
    start = max(n_max + 20, int(x + 30.0 * x ** (1.0 / 3.0) + 40.0))
    return start + (start % 2)


def bessel_j_table(x: float, n_max: int) -> np.ndarray:
    """J_0(x) .. J_n_max(x) for x >= 0."""
    if x < 0:
        raise PreconditionError(f"tables are built for x >= 0, got {x}")
    if n_max < 0:
        raise PreconditionError(f"n_max must be nonnegative, got {n_max}")
    values = np.zeros(n_max + 1)
    if x == 0.0:
        values[0] = 1.0
        return values
    start = miller_start(x, n_max)
    upper, current = 0.0, 1e-30
    norm = 2.0 * current
    for n in range(start, 0, -1):
        lower = (2.0 * n / x) * current - upper
        upper, current = current, lower
        k = n - 1
        if k <= n_max:
            values[k] = current
        if k % 2 == 0:
            norm += current if k == 0 else 2.0 * current
        if abs(current) > RESCALE_AT:
            values /= RESCALE_AT
            norm /= RESCALE_AT
            upper /= RESCALE_AT
            current /= RESCALE_AT
    return values / norm


def bessel_j(n: int, x: float, table: np.ndarray | None = None) -> float:
    """J_n(x) for any integer n, using J_(-n) = (-1)^n J_n."""
    order = abs(n)
    if table is None or order >= len(table):
        table = bessel_j_table(x, order)
    value = float(table[order])
    return -value if n < 0 and order % 2 else value


def bessel_j_series(n: int, x: float, dps: int = 40) -> float:
    """J_n(x) from its ascending series, summed with `dps` decimal digits."""
    if abs(x) > SERIES_MAX_ARGUMENT:
        raise PreconditionError(
            f"ascending series is used for |x| <= {SERIES_MAX_ARGUMENT}, got {x}"
        )
    order = abs(n)
    with mpmath.workdps(dps):
        half = mpmath.mpf(x) / 2
        term = half ** order / mpmath.factorial(order)
        total = term
        k = 0
        while abs(term) > mpmath.mpf(10) ** (-dps):
            k += 1
            term *= -half * half / (k * (k + order))
            total += term
        value = float(total)
    return -value if n < 0 and order % 2 else value


def bessel_tail_bound(n: int, x: float) -> float:
    """Upper bound on |J_n(x)|.

    1 when |n| <= x, else exp(|n| (tanh a - a)) with cosh a = |n|/x.
    """
    order = abs(n)
    if x <= 0.0:
        return 1.0 if order == 0 else 0.0
    if order <= x:
        return 1.0
    a = math.acosh(order / x)
    return math.exp(order * (math.tanh(a) - a))
