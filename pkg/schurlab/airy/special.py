"""airy.special

The Airy function Ai and its derivative.

For |x| <= SWITCH the two-term Maclaurin split

    Ai(x) = c1 f(x) - c2 g(x),
    f = sum 3^k (1/3)_k x^(3k) / (3k)!,  g = sum 3^k (2/3)_k x^(3k+1) / (3k+1)!,

is summed with mpmath at MACLAURIN_DPS digits, enough to absorb the
cancellation at x = SWITCH. Beyond it the standard asymptotic expansions in
zeta = (2/3)|x|^(3/2) are summed to their smallest term.
"""

import math
from typing import NamedTuple

import mpmath
import numpy as np

from schurlab.common.errors import PreconditionError

SWITCH = 7.0
MAX_ARGUMENT = 40.0
MACLAURIN_DPS = 40
ASYMPTOTIC_MAX_TERMS = 60


class AiryPair(NamedTuple):
    ai: float
    ai_prime: float


def _check(x: float) -> None:
    if not math.isfinite(x) or abs(x) > MAX_ARGUMENT:
        raise PreconditionError(f"Airy functions are evaluated for |x| <= {MAX_ARGUMENT}, got {x}")


def airy_maclaurin(x: float, dps: int = MACLAURIN_DPS) -> AiryPair:
    """Ai and Ai' from the Maclaurin series."""
    with mpmath.workdps(dps):
        z = mpmath.mpf(x)
        cube = z ** 3
        eps = mpmath.mpf(10) ** (-dps)
        f = t = mpmath.mpf(1)
        g = u = z
        df, dg = mpmath.mpf(0), mpmath.mpf(1)
        s = z * z / 2  # derivative term of t_1
        v = mpmath.mpf(1)
        k = 0
        while True:
            t *= cube / ((3 * k + 2) * (3 * k + 3))
            u *= cube / ((3 * k + 3) * (3 * k + 4))
            v *= cube / ((3 * k + 1) * (3 * k + 3))
            f += t
            g += u
            dg += v
            if k:
                s *= cube / ((3 * k) * (3 * k + 2))
            df += s
            k += 1
            if max(abs(t), abs(u), abs(s), abs(v)) <= eps * max(abs(f), abs(g), 1):
                break
        c1, c2 = mpmath.mpf(1) / (mpmath.cbrt(9) * mpmath.gamma(mpmath.mpf(2) / 3)), \
            mpmath.mpf(1) / (mpmath.cbrt(3) * mpmath.gamma(mpmath.mpf(1) / 3))
        return AiryPair(float(c1 * f - c2 * g), float(c1 * df - c2 * dg))


def _asymptotic_coefficients(count: int) -> tuple[list[float], list[float]]:
    """u_k and v_k of the asymptotic expansions."""
    u, v = [1.0], [1.0]
    for k in range(1, count):
        u.append(u[-1] * (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / (216.0 * (2 * k - 1) * k))
        v.append(-u[k] * (6 * k + 1) / (6 * k - 1))
    return u, v


U_COEFFS, V_COEFFS = _asymptotic_coefficients(ASYMPTOTIC_MAX_TERMS)


def _alternating(coeffs: list[float], zeta: float, parity: int | None = None) -> float:
    """sum (-1)^k c_k / zeta^k, or over k of one parity with (-1)^(k//2),
    stopped at the smallest term.
    """
    total, previous = 0.0, math.inf
    indices = range(len(coeffs)) if parity is None else range(parity, len(coeffs), 2)
    for step, k in enumerate(indices):
        term = coeffs[k] / zeta ** k
        if abs(term) > previous:
            break
        total += -term if step % 2 else term
        previous = abs(term)
        if abs(term) < 1e-17 * abs(total):
            break
    return total


def airy_asymptotic(x: float) -> AiryPair:
    """Ai and Ai' from the large-|x| expansions."""
    if x == 0:
        raise PreconditionError("asymptotic expansions need x != 0")
    z = abs(x)
    zeta = 2.0 / 3.0 * z ** 1.5
    root = math.sqrt(math.pi)
    if x > 0:
        decay = math.exp(-zeta)
        ai = decay / (2.0 * root * z ** 0.25) * _alternating(U_COEFFS, zeta)
        aip = -z ** 0.25 * decay / (2.0 * root) * _alternating(V_COEFFS, zeta)
        return AiryPair(ai, aip)
    phase = zeta - math.pi / 4.0
    c, s = math.cos(phase), math.sin(phase)
    ai = (c * _alternating(U_COEFFS, zeta, 0) + s * _alternating(U_COEFFS, zeta, 1)) \
        / (root * z ** 0.25)
    aip = z ** 0.25 / root * (
        s * _alternating(V_COEFFS, zeta, 0) - c * _alternating(V_COEFFS, zeta, 1)
    )
    return AiryPair(ai, aip)


def airy(x: float) -> AiryPair:
    """Ai(x) and Ai'(x).

    Raises:
        PreconditionError: If |x| > MAX_ARGUMENT.
    """
    x = float(x)
    _check(x)
    if abs(x) <= SWITCH:
        return airy_maclaurin(x)
    return airy_asymptotic(x)


def airy_ai(x: float) -> float:
    return airy(x).ai


def airy_ai_prime(x: float) -> float:
    return airy(x).ai_prime


def airy_arrays(xs: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Ai and Ai' at many points; arguments beyond MAX_ARGUMENT, where both
    are below 1e-70, give zeros.
    """
    xs = np.asarray(xs, dtype=float)
    ai, aip = np.zeros_like(xs), np.zeros_like(xs)
    for index, x in np.ndenumerate(xs):
        if x > MAX_ARGUMENT:
            continue
        ai[index], aip[index] = airy(x)
    return ai, aip
