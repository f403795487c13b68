"""schurq.pfaffian

Skew-symmetric matrices and their pfaffians.

Three engines share one entry point:

- exact, dim <= 8: expansion along the first row;
- exact, dim > 8: denominators are cleared and the integer matrix is
  reduced by fraction-free pairwise elimination, where every stage entry
  is itself the pfaffian of a principal submatrix and the division by the
  previous pivot is exact;
- approx: Parlett-Reid style reduction with the largest entry of the pivot
  row swapped into place.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from schurlab.common.errors import InternalError, PreconditionError
from schurlab.common.schema import APPROX, EXACT, Mode, Scalar
from schurlab.common.utils.numeric import mode_of, one, to_mode, zero

logger = logging.getLogger(__name__)

EXPANSION_MAX_DIM = 8


@dataclass(frozen=True)
class SkewMatrix:
    """An even-dimensional skew matrix stored by its strict upper triangle.

    upper[i] holds a(i, j) for j = i+1 .. dim-1 (0-based).
    """
    dim: int
    upper: tuple[tuple[Scalar, ...], ...]
    mode: Mode = EXACT

    def __post_init__(self) -> None:
        if self.dim < 0:
            raise PreconditionError(f"dimension must be nonnegative, got {self.dim}")
        if len(self.upper) != self.dim or any(
            len(row) != self.dim - i - 1 for i, row in enumerate(self.upper)
        ):
            raise PreconditionError("upper triangle does not match the dimension")
        object.__setattr__(self, "upper", tuple(
            tuple(to_mode(v, self.mode) for v in row) for row in self.upper
        ))

    @classmethod
    def from_function(
            cls,
            dim: int,
            entry: Callable[[int, int], Scalar],
            mode: Mode = EXACT,
    ) -> "SkewMatrix":
        """Build from entry(i, j), called for 0 <= i < j < dim only."""
        return cls(dim, tuple(
            tuple(entry(i, j) for j in range(i + 1, dim)) for i in range(dim)
        ), mode)

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[Scalar]], mode: Mode | None = None) -> "SkewMatrix":
        """Build from a full matrix, reading only its strict upper triangle."""
        dim = len(rows)
        if mode is None:
            modes = {mode_of(v) for row in rows for v in row}
            mode = APPROX if APPROX in modes else EXACT
        return cls.from_function(dim, lambda i, j: rows[i][j], mode)

    def entry(self, i: int, j: int) -> Scalar:
        if i == j:
            return zero(self.mode)
        if i < j:
            return self.upper[i][j - i - 1]
        return -self.upper[j][i - j - 1]

    def to_dense(self) -> list[list[Scalar]]:
        return [[self.entry(i, j) for j in range(self.dim)] for i in range(self.dim)]

    def to_numpy(self) -> np.ndarray:
        return np.array(
            [[float(self.entry(i, j)) for j in range(self.dim)] for i in range(self.dim)],
            dtype=float,
        )

    def minor(self, drop: Sequence[int]) -> "SkewMatrix":
        """Principal submatrix with the given indices removed."""
        keep = [k for k in range(self.dim) if k not in set(drop)]
        return SkewMatrix.from_function(
            len(keep), lambda i, j: self.entry(keep[i], keep[j]), self.mode,
        )


def _expand(m: list[list[Scalar]], idx: tuple[int, ...], mode: Mode) -> Scalar:
    if not idx:
        return one(mode)
    first, rest = idx[0], idx[1:]
    total = zero(mode)
    for pos, j in enumerate(rest):
        a = m[first][j]
        if not a:
            continue
        term = a * _expand(m, rest[:pos] + rest[pos + 1:], mode)
        total += term if pos % 2 == 0 else -term
    return total


def _integer_pfaffian(m: list[list[int]]) -> int:
    dim = len(m)
    sign, previous = 1, 1
    for k in range(0, dim, 2):
        a, b = k, k + 1
        if m[a][b] == 0:
            swap = next((j for j in range(b + 1, dim) if m[a][j] != 0), None)
            if swap is None:
                return 0
            # simultaneous row and column swap flips the sign
            m[b], m[swap] = m[swap], m[b]
            for row in m:
                row[b], row[swap] = row[swap], row[b]
            sign = -sign
        pivot = m[a][b]
        for i in range(b + 1, dim):
            for j in range(i + 1, dim):
                value = pivot * m[i][j] - m[a][i] * m[b][j] + m[a][j] * m[b][i]
                quotient, remainder = divmod(value, previous)
                if remainder:
                    raise InternalError("fraction-free pfaffian step was not exact")
                m[i][j], m[j][i] = quotient, -quotient
        previous = pivot
    return sign * previous


def _exact_pfaffian(matrix: SkewMatrix) -> Fraction:
    if matrix.dim <= EXPANSION_MAX_DIM:
        return _expand(matrix.to_dense(), tuple(range(matrix.dim)), EXACT)
    denominators = [v.denominator for row in matrix.upper for v in row]
    scale = math.lcm(*denominators) if denominators else 1
    dense = [[int(v * scale) for v in row] for row in matrix.to_dense()]
    logger.debug("fraction-free pfaffian dim=%d scale=%d", matrix.dim, scale)
    return Fraction(_integer_pfaffian(dense), scale ** (matrix.dim // 2))


def _approx_pfaffian(matrix: SkewMatrix) -> float:
    a = matrix.to_numpy()
    dim = matrix.dim
    result = 1.0
    for k in range(0, dim, 2):
        j = k + 1 + int(np.argmax(np.abs(a[k, k + 1:])))
        if a[k, j] == 0.0:
            return 0.0
        if j != k + 1:
            a[[k + 1, j], :] = a[[j, k + 1], :]
            a[:, [k + 1, j]] = a[:, [j, k + 1]]
            result = -result
        pivot = a[k, k + 1]
        result *= pivot
        if k + 2 < dim:
            u, v = a[k, k + 2:], a[k + 1, k + 2:]
            a[k + 2:, k + 2:] -= (np.outer(u, v) - np.outer(v, u)) / pivot
    return float(result)


def pfaffian(matrix: SkewMatrix) -> Scalar:
    """Pf(A), with Pf(A)^2 = det(A).

    Raises:
        PreconditionError: If the dimension is odd.
    """
    if matrix.dim % 2:
        raise PreconditionError(f"pfaffian needs an even dimension, got {matrix.dim}")
    if matrix.dim == 0:
        return one(matrix.mode)
    if matrix.mode == EXACT:
        return _exact_pfaffian(matrix)
    return _approx_pfaffian(matrix)


def pfaffian_with_sensitivity(
        matrix: SkewMatrix,
        errors: Sequence[Sequence[float]] | None = None,
) -> tuple[Scalar, float]:
    """Pfaffian plus a first-order bound on its error.

    errors[i][j] (i < j) bounds the error of a(i, j); the derivative of Pf
    with respect to a(i, j) is a signed pfaffian of the minor without rows
    and columns i and j.
    """
    value = pfaffian(matrix)
    if errors is None or matrix.dim == 0:
        return value, 0.0
    bound = 0.0
    for i in range(matrix.dim):
        for j in range(i + 1, matrix.dim):
            e = float(errors[i][j])
            if e:
                bound += e * abs(float(pfaffian(matrix.minor((i, j)))))
    return value, bound
