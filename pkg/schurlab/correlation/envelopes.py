"""correlation.envelopes

Magnitude envelopes |a_n| <= A(n) for the Laurent coefficients of
J(z; X, Y), used to bound the terms a kernel sum leaves out.
"""

import math
from dataclasses import dataclass

from .bessel import bessel_tail_bound

MAX_TAIL_TERMS = 1_000_000


@dataclass(frozen=True)
class GeometricEnvelope:
    """A(n) = scale * rate^|n|."""
    scale: float
    rate: float

    def at(self, n: int) -> float:
        return self.scale * self.rate ** abs(n)

    def pair_tail(self, u: int, v: int, depth: int) -> float:
        """Bound on sum_{k > depth} A(u + k) A(v - k).

        Uses |u + k| >= k - |u| and |v - k| >= k - |v|.
        """
        if not self.scale:
            return 0.0
        exponent = 2 * (depth + 1) - abs(u) - abs(v)
        return self.scale ** 2 * self.rate ** exponent / (1.0 - self.rate ** 2)


@dataclass(frozen=True)
class BesselEnvelope:
    """A(n) from |J_n(x)| <= 1 and the Debye-type bound beyond n = x."""
    x: float

    def at(self, n: int) -> float:
        return bessel_tail_bound(n, self.x)

    def pair_tail(self, u: int, v: int, depth: int) -> float:
        """Bound on sum_{k > depth} A(u + k) A(v - k), summed until the term
        ratio, which is nonincreasing once both orders exceed x, drops
        below one half and the remainder is geometric.
        """
        total, previous = 0.0, None
        for k in range(depth + 1, depth + 1 + MAX_TAIL_TERMS):
            term = self.at(u + k) * self.at(v - k)
            total += term
            orders_past_x = min(abs(u + k), abs(v - k)) > self.x
            if previous and orders_past_x:
                ratio = term / previous
                if ratio < 0.5:
                    return total + term * ratio / (1.0 - ratio)
            if term == 0.0 and orders_past_x:
                return total
            previous = term
        return math.inf
