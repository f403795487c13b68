"""partitions.partition

Partition, StrictPartition and ShiftedShape value types.
"""

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from math import comb

from schurlab.common.errors import PreconditionError


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive parts."""
    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 1 for p in parts):
            raise PreconditionError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise PreconditionError(f"parts must be weakly decreasing: {parts}")

    @classmethod
    def of(cls, *parts: int):
        """Build from parts, dropping zeros."""
        return cls(tuple(p for p in parts if p))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __len__(self) -> int:
        return self.length

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"

    @cached_property
    def multiplicities(self) -> Counter:
        return Counter(self.parts)

    def mult(self, j: int) -> int:
        """Multiplicity m_j of the part j."""
        return self.multiplicities.get(j, 0)

    @property
    def nfun(self) -> int:
        """n(lambda) = sum (j - 1) lambda_j."""
        return sum(j * p for j, p in enumerate(self.parts))

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition()
        return Partition(tuple(
            sum(1 for p in self.parts if p > c) for c in range(self.parts[0])
        ))

    def nfun_conjugate(self) -> int:
        """n(lambda) from the conjugate: sum C(lambda'_j, 2)."""
        return sum(comb(c, 2) for c in self.conjugate().parts)

    def padded(self, n: int) -> tuple[int, ...]:
        """Parts padded with zeros to length n."""
        if n < self.length:
            raise PreconditionError(f"{self} has more than {n} parts")
        return self.parts + (0,) * (n - self.length)

    def contains(self, values) -> bool:
        """Whether every value is a part, reading the partition as a set."""
        parts = set(self.parts)
        return all(v in parts for v in values)


@dataclass(frozen=True)
class StrictPartition(Partition):
    """A partition with pairwise distinct parts, also read as a finite set."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if any(a == b for a, b in zip(self.parts, self.parts[1:])):
            raise PreconditionError(f"parts must be strictly decreasing: {self.parts}")

    @classmethod
    def from_set(cls, values) -> "StrictPartition":
        return cls(tuple(sorted(set(values), reverse=True)))


@dataclass(frozen=True)
class ShiftedShape:
    """Cells (i, j) with i <= j <= i + lambda_i - 1, rows counted from 1."""
    partition: StrictPartition

    @cached_property
    def cells(self) -> frozenset[tuple[int, int]]:
        return frozenset(
            (i, j)
            for i, part in enumerate(self.partition.parts, start=1)
            for j in range(i, i + part)
        )

    def row(self, i: int) -> list[tuple[int, int]]:
        part = self.partition.parts[i - 1]
        return [(i, j) for j in range(i, i + part)]

    def __contains__(self, cell: tuple[int, int]) -> bool:
        return cell in self.cells


def shifted_shape(partition: StrictPartition) -> ShiftedShape:
    return ShiftedShape(partition)
