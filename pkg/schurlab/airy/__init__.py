"""schurlab.airy

The Airy function and kernel, the Tracy-Widom distribution F2 as a
Fredholm determinant, and the edge limit of the exponential-specialization
kernel to the Airy kernel.
"""

from .fredholm import (
    DEFAULT_ORDER,
    F2Value,
    QuadratureRule,
    f2,
    f2_mean,
    f2_table,
    fredholm_determinant,
    s_grid,
)
from .kernel import airy_kernel, airy_kernel_integral, airy_kernel_matrix
from .limits import (
    LimitProbe,
    bessel_airy_probe,
    bessel_kernel_spec,
    correlation_probe,
    determinant_probe,
    edge_centre,
    edge_point,
    edge_width,
    probe_grid,
)
from .special import (
    AiryPair,
    airy,
    airy_ai,
    airy_ai_prime,
    airy_arrays,
    airy_asymptotic,
    airy_maclaurin,
)

__all__ = [
    "DEFAULT_ORDER",
    "AiryPair",
    "F2Value",
    "LimitProbe",
    "QuadratureRule",
    "airy",
    "airy_ai",
    "airy_ai_prime",
    "airy_arrays",
    "airy_asymptotic",
    "airy_kernel",
    "airy_kernel_integral",
    "airy_kernel_matrix",
    "airy_maclaurin",
    "bessel_airy_probe",
    "bessel_kernel_spec",
    "correlation_probe",
    "determinant_probe",
    "edge_centre",
    "edge_point",
    "edge_width",
    "f2",
    "f2_mean",
    "f2_table",
    "fredholm_determinant",
    "probe_grid",
    "s_grid",
]
