"""schurlab.correlation

Pfaffian correlation functions of the shifted Schur measure: the Laurent
coefficients of J(z; X, Y), the kernel K(u, v), the matrix M(A), and a
direct-summation oracle. Exponential specializations in double precision
use Bessel functions.
"""

from .bessel import bessel_j, bessel_j_series, bessel_j_table, bessel_tail_bound
from .kernel import (
    BESSEL,
    CONVOLUTION,
    CorrelationQuery,
    JTable,
    KernelSpec,
    KernelValue,
    assemble_m,
    assemble_with_errors,
    epsilon,
    j_coeffs,
    kernel_entry,
    kernel_spec,
)
from .rho import (
    BRUTEFORCE_MAX_CUTOFF,
    RhoValue,
    alpha_kernel,
    rho_bruteforce,
    rho_pfaffian,
    shifted_schur_probability,
)

__all__ = [
    "BESSEL",
    "BRUTEFORCE_MAX_CUTOFF",
    "CONVOLUTION",
    "CorrelationQuery",
    "JTable",
    "KernelSpec",
    "KernelValue",
    "RhoValue",
    "alpha_kernel",
    "assemble_m",
    "assemble_with_errors",
    "bessel_j",
    "bessel_j_series",
    "bessel_j_table",
    "bessel_tail_bound",
    "epsilon",
    "j_coeffs",
    "kernel_entry",
    "kernel_spec",
    "rho_bruteforce",
    "rho_pfaffian",
    "shifted_schur_probability",
]
