"""partitions.enumerate

Enumeration of partitions and strict partitions of N.

Both enumerations are lexicographic-descending: (4), (3,1), ... so that
fixtures built from them are stable.
"""

from collections.abc import Iterator

from schurlab.common.errors import PreconditionError

from .partition import Partition, StrictPartition


def _strict_parts(n: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        # the remaining parts are distinct and below `first`
        if first * (first + 1) // 2 < n:
            break
        for rest in _strict_parts(n - first, first - 1):
            yield (first,) + rest


def _parts(n: int, max_part: int, max_length: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    if max_length == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        if first * max_length < n:
            break
        for rest in _parts(n - first, first, max_length - 1):
            yield (first,) + rest


def iter_strict(N: int, max_part: int | None = None) -> Iterator[StrictPartition]:
    if N < 0:
        raise PreconditionError(f"N must be nonnegative, got {N}")
    for parts in _strict_parts(N, N if max_part is None else max_part):
        yield StrictPartition(parts)


def enumerate_strict(N: int) -> list[StrictPartition]:
    """All strict partitions of N, lexicographic-descending."""
    return list(iter_strict(N))


def enumerate_partitions(
        N: int,
        max_part: int | None = None,
        max_length: int | None = None,
) -> list[Partition]:
    """All partitions of N with optional bounds on parts and length."""
    if N < 0:
        raise PreconditionError(f"N must be nonnegative, got {N}")
    return [
        Partition(parts)
        for parts in _parts(
            N,
            N if max_part is None else max_part,
            N if max_length is None else max_length,
        )
    ]


def strict_partition_count(N: int) -> int:
    """q(N), the coefficient of x^N in prod_k (1 + x^k)."""
    if N < 0:
        raise PreconditionError(f"N must be nonnegative, got {N}")
    counts = [1] + [0] * N
    for k in range(1, N + 1):
        for n in range(N, k - 1, -1):
            counts[n] += counts[n - k]
    return counts[N]
