"""airy.fredholm

The Tracy-Widom distribution F2(s) = det(I - K_Airy) on L^2([s, inf)),
evaluated by the Nystrom method: with a rule (x_i, w_i) on [s, inf),

    F2(s) ~ det(delta_ij - sqrt(w_i) K(x_i, x_j) sqrt(w_j)).

Gauss-Legendre nodes on [-1, 1] are carried to [s, inf) by
x = s + SCALE tan(pi (u + 1) / 4).
"""

import logging
import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np

from schurlab.common.errors import PreconditionError, QuadratureError

from .kernel import airy_kernel_matrix

logger = logging.getLogger(__name__)

SCALE = 10.0
MIN_S = -12.0
MIN_ORDER = 20
DEFAULT_ORDER = 80


@dataclass(frozen=True, eq=False)
class QuadratureRule:
    """An m-point rule on [s, inf): Gauss-Legendre through a tangent map."""
    order: int
    s: float
    reference_nodes: np.ndarray
    reference_weights: np.ndarray

    @classmethod
    def on(cls, s: float, order: int) -> "QuadratureRule":
        nodes, weights = np.polynomial.legendre.leggauss(order)
        return cls(order, float(s), nodes, weights)

    def transform(self, u):
        return self.s + SCALE * np.tan(np.pi * (np.asarray(u) + 1.0) / 4.0)

    def derivative(self, u):
        angle = np.pi * (np.asarray(u) + 1.0) / 4.0
        return SCALE * np.pi / 4.0 / np.cos(angle) ** 2

    @property
    def nodes(self) -> np.ndarray:
        return self.transform(self.reference_nodes)

    @property
    def weights(self) -> np.ndarray:
        return self.reference_weights * self.derivative(self.reference_nodes)


class F2Value(NamedTuple):
    """F2(s) at order m and |F2(s, m) - F2(s, 2m)|."""
    s: float
    value: float
    convergence: float


def _check(s: float, order: int) -> None:
    if s < MIN_S:
        raise PreconditionError(f"F2 is evaluated for s >= {MIN_S}, got {s}")
    if order < MIN_ORDER:
        raise PreconditionError(f"quadrature order must be >= {MIN_ORDER}, got {order}")


def fredholm_determinant(s: float, order: int) -> float:
    """det(I - K_Airy) on [s, inf) with an order-m Nystrom rule.

    Raises:
        QuadratureError: If the discretised kernel has non-finite entries.
    """
    rule = QuadratureRule.on(s, order)
    root = np.sqrt(rule.weights)
    matrix = airy_kernel_matrix(rule.nodes) * np.outer(root, root)
    if not np.all(np.isfinite(matrix)):
        raise QuadratureError(f"non-finite Nystrom matrix at s={s}, m={order}", s=s, m=order)
    return float(np.linalg.det(np.eye(order) - matrix))


def f2(s: float, m: int = DEFAULT_ORDER) -> F2Value:
    """F2(s) with its self-convergence estimate against order 2m."""
    _check(s, m)
    value = fredholm_determinant(s, m)
    finer = fredholm_determinant(s, 2 * m)
    logger.debug("F2(%g) = %.15g, m=%d, drift %.2g", s, value, m, abs(value - finer))
    return F2Value(float(s), value, abs(value - finer))


def s_grid(s_min: float, s_max: float, step: float) -> list[float]:
    """s_min, s_min + step, ... up to s_max inclusive, without drift."""
    if step <= 0 or s_max < s_min:
        raise PreconditionError(f"invalid grid [{s_min}, {s_max}] step {step}")
    count = int(math.floor((s_max - s_min) / step + 1e-9))
    return [round(s_min + k * step, 12) for k in range(count + 1)]


def f2_table(grid: Iterable[float], m: int = DEFAULT_ORDER) -> list[F2Value]:
    """F2 with self-convergence over a grid of s."""
    return [f2(s, m) for s in grid]


def f2_mean(s_min: float, s_max: float, step: float, m: int = 40) -> float:
    """int s dF2(s) over [s_min, s_max], integrating by parts with the
    trapezoidal rule:

        b F(b) - a F(a) - int_a^b F(s) ds.
    """
    grid = s_grid(s_min, s_max, step)
    for s in grid:
        _check(s, m)
    values = [fredholm_determinant(s, m) for s in grid]
    area = sum(
        0.5 * (grid[k + 1] - grid[k]) * (values[k] + values[k + 1])
        for k in range(len(grid) - 1)
    )
    return grid[-1] * values[-1] - grid[0] * values[0] - area
