"""airy.limits

Edge scaling of the poissonized shifted Plancherel measure.

With n(x) = floor(2 sqrt(2 xi) + x (2 xi)^(1/6)) and K_B the correlation
kernel of the exponential specialization (Bessel coefficients), as
xi -> infinity

    (2 xi)^(1/6) K_B(n(x), n(y))    -> 0,
    (2 xi)^(1/6) K_B(n(x), -n(y))   -> K_Airy(x, y),
    (2 xi)^(1/6) K_B(-n(x), -n(y))  -> 0,

and (2 xi)^(N/6) rho({n(x_1), ..., n(x_N)}) -> det K_Airy(x_i, x_j).
"""

import logging
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from schurlab.common.errors import PreconditionError
from schurlab.correlation import KernelSpec, kernel_entry, rho_pfaffian
from schurlab.schurq import exponential

from .kernel import airy_kernel, airy_kernel_matrix

logger = logging.getLogger(__name__)

# inner-sum depth in units of the edge width (2 xi)^(1/6)
DEPTH_WIDTHS = 40
MIN_DEPTH = 60


def edge_centre(xi: float) -> float:
    return 2.0 * math.sqrt(2.0 * xi)


def edge_width(xi: float) -> float:
    return (2.0 * xi) ** (1.0 / 6.0)


def edge_point(xi: float, x: float) -> int:
    """floor(2 sqrt(2 xi) + x (2 xi)^(1/6))."""
    return math.floor(edge_centre(xi) + x * edge_width(xi))


def bessel_kernel_spec(xi: float, x_max: float) -> KernelSpec:
    """A Bessel-route kernel reaching the edge points up to x_max."""
    if xi <= 0:
        raise PreconditionError(f"xi must be positive, got {xi}")
    depth = max(MIN_DEPTH, math.ceil(DEPTH_WIDTHS * edge_width(xi)))
    reach = edge_point(xi, x_max) + 1
    spec = exponential(float(xi), mode="approx")
    return KernelSpec(spec, spec, reach + depth, "approx", depth)


@dataclass(frozen=True)
class LimitProbe:
    """The three scaled kernel blocks at one (x, y), with the Airy target."""
    xi: float
    x: float
    y: float
    plus_plus: float
    mixed: float
    minus_minus: float
    airy: float

    @property
    def mixed_gap(self) -> float:
        return abs(self.mixed - self.airy)


def _points(xi: float, xs: Sequence[float]) -> list[int]:
    points = [edge_point(xi, x) for x in xs]
    if min(points) < 1:
        raise PreconditionError(
            f"edge points must be positive integers; xi={xi} is too small for x={min(xs)}",
        )
    return points


def bessel_airy_probe(
        xi: float,
        x: float,
        y: float,
        ks: KernelSpec | None = None,
) -> LimitProbe:
    """Scaled kernel values at (n(x), n(y)) and their signed variants."""
    u, v = _points(xi, (x, y))
    ks = ks or bessel_kernel_spec(xi, max(x, y))
    scale = edge_width(xi)
    probe = LimitProbe(
        float(xi), float(x), float(y),
        scale * kernel_entry(ks, u, v).value if u != v else 0.0,
        scale * kernel_entry(ks, u, -v).value,
        scale * kernel_entry(ks, -u, -v).value if u != v else 0.0,
        airy_kernel(x, y),
    )
    logger.debug("probe xi=%g (x, y)=(%g, %g): mixed %.6g vs %.6g", xi, x, y, probe.mixed, probe.airy)
    return probe


def probe_grid(xi: float, xs: Sequence[float]) -> list[LimitProbe]:
    """Probes over xs x xs sharing one kernel table."""
    ks = bessel_kernel_spec(xi, max(xs))
    return [bessel_airy_probe(xi, x, y, ks) for x in xs for y in xs]


def determinant_probe(xi: float, xs: Sequence[float]) -> tuple[float, float]:
    """(det of the scaled mixed block, det of the Airy kernel) at the xs."""
    ks = bessel_kernel_spec(xi, max(xs))
    points = _points(xi, xs)
    scale = edge_width(xi)
    block = np.array([[scale * kernel_entry(ks, u, -v).value for v in points] for u in points])
    return float(np.linalg.det(block)), float(np.linalg.det(airy_kernel_matrix(xs)))


def correlation_probe(xi: float, xs: Sequence[float]) -> tuple[float, float]:
    """((2 xi)^(N/6) rho(n(x_1), ..., n(x_N)), det K_Airy(x_i, x_j)).

    Raises:
        PreconditionError: If two points share an edge point.
    """
    points = _points(xi, xs)
    if len(set(points)) != len(points):
        raise PreconditionError(f"edge points collide at xi={xi}: {points}")
    ks = bessel_kernel_spec(xi, max(xs))
    rho = rho_pfaffian(ks, points)
    scaled = edge_width(xi) ** len(points) * rho.value
    return float(scaled), float(np.linalg.det(airy_kernel_matrix(xs)))
