"""airy.kernel

The Airy kernel

    K(x, y) = (Ai(x) Ai'(y) - Ai'(x) Ai(y)) / (x - y),
    K(x, x) = Ai'(x)^2 - x Ai(x)^2,

and its integral form int_0^inf Ai(x + z) Ai(y + z) dz, kept as an
independent check.
"""

import numpy as np

from .special import airy, airy_arrays

DIAGONAL_GAP = 1e-6
INTEGRAL_LENGTH = 24.0
INTEGRAL_PANELS = 48
INTEGRAL_ORDER = 16


def airy_kernel(x: float, y: float) -> float:
    """K_Airy(x, y); arguments closer than DIAGONAL_GAP use the diagonal
    value at their midpoint.
    """
    if abs(x - y) < DIAGONAL_GAP:
        mid = 0.5 * (x + y)
        ai, aip = airy(mid)
        return aip * aip - mid * ai * ai
    ax, apx = airy(x)
    ay, apy = airy(y)
    return (ax * apy - apx * ay) / (x - y)


def kernel_from_values(xs: np.ndarray, ai: np.ndarray, aip: np.ndarray) -> np.ndarray:
    """The matrix K(x_i, x_j) from precomputed Ai and Ai' at the x_i."""
    diff = xs[:, None] - xs[None, :]
    near = np.abs(diff) < DIAGONAL_GAP
    numerator = np.outer(ai, aip) - np.outer(aip, ai)
    with np.errstate(divide="ignore", invalid="ignore"):
        matrix = numerator / np.where(near, 1.0, diff)
    diagonal = aip * aip - xs * ai * ai
    # near pairs off the diagonal only arise for repeated nodes
    return np.where(near, 0.5 * (diagonal[:, None] + diagonal[None, :]), matrix)


def airy_kernel_matrix(xs) -> np.ndarray:
    xs = np.asarray(xs, dtype=float)
    ai, aip = airy_arrays(xs)
    return kernel_from_values(xs, ai, aip)


def airy_kernel_integral(x: float, y: float) -> float:
    """int_0^inf Ai(x + z) Ai(y + z) dz by composite Gauss-Legendre on
    [0, INTEGRAL_LENGTH]; the remainder is below Ai(min(x, y) + 24)^2.
    """
    nodes, weights = np.polynomial.legendre.leggauss(INTEGRAL_ORDER)
    width = INTEGRAL_LENGTH / INTEGRAL_PANELS
    left = np.arange(INTEGRAL_PANELS) * width
    z = (left[:, None] + 0.5 * width * (nodes[None, :] + 1.0)).ravel()
    w = np.tile(0.5 * width * weights, INTEGRAL_PANELS)
    ax, _ = airy_arrays(x + z)
    ay, _ = airy_arrays(y + z)
    return float(np.sum(w * ax * ay))
