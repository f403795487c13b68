"""series.products

Product-form generating functions of finite variable lists.
"""

from typing import Sequence

from schurlab.common.errors import DivergentSpecializationError, PreconditionError
from schurlab.common.schema import EXACT, Mode, Scalar
from schurlab.common.utils.numeric import one, to_mode, zero

from .laurent import TruncatedLaurentSeries


def product_form(
        xs: Sequence[Scalar],
        T: int,
        sign: int = 1,
        mode: Mode = EXACT,
) -> TruncatedLaurentSeries:
    """Expansion of prod_i (1 + sign x_i z)/(1 - sign x_i z) through z^T.

    Each factor is applied in O(T): divide by (1 - y z) with a running
    geometric sum, then multiply by (1 + y z).

    Raises:
        DivergentSpecializationError: If some |x_i| >= 1.
        PreconditionError: If sign is not +1 or -1, or T < 0.
    """
    if sign not in (1, -1):
        raise PreconditionError(f"sign must be +1 or -1, got {sign}")
    if T < 0:
        raise PreconditionError(f"truncation order must be nonnegative, got {T}")
    ys = [to_mode(x, mode) for x in xs]
    for x in ys:
        if abs(x) >= 1:
            raise DivergentSpecializationError(
                f"variable {x} has magnitude >= 1", variable=str(x),
            )
    coeffs = [one(mode)] + [zero(mode)] * T
    for x in ys:
        y = sign * x
        if not y:
            continue
        for n in range(1, T + 1):
            coeffs[n] += y * coeffs[n - 1]
        for n in range(T, 0, -1):
            coeffs[n] += y * coeffs[n - 1]
    return TruncatedLaurentSeries(0, T, tuple(coeffs), mode)
