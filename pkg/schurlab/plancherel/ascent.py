"""plancherel.ascent

Longest ascent pairs.

An ascent pair of a permutation is a nonempty decreasing subsequence
pi(i_1) > ... > pi(i_k) together with a nonempty increasing subsequence
pi(j_1) < ... < pi(j_l) such that pi(i_1) <= pi(j_1); equality means the
two share their first element. L(pi) is the largest k + l - 1, and
L of the empty permutation is 0.

Three implementations share this definition: an exhaustive oracle, a
quadratic dynamic programme and an O(N log N) routine.
"""

import bisect
import itertools
import logging
import math
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from schurlab.common.errors import InfeasibleScaleError, PreconditionError

logger = logging.getLogger(__name__)

EXHAUSTIVE_MAX_N = 9
DP_MAX_N = 10_000
FAST_MAX_N = 10_000_000
CENSUS_MAX_N = 10


@dataclass(frozen=True)
class PermutationView:
    """pi(1..N) stored 0-based as the values 1..N."""
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        values = tuple(int(v) for v in self.values)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise PreconditionError(f"not a permutation of 1..{len(values)}: {values}")
        object.__setattr__(self, "values", values)

    @classmethod
    def of(cls, values: "PermutationView | Sequence[int] | np.ndarray") -> "PermutationView":
        if isinstance(values, PermutationView):
            return values
        return cls(tuple(values))

    def __len__(self) -> int:
        return len(self.values)


def _monotone_runs(values: Sequence[int], decreasing: bool) -> list[tuple[int, int]]:
    """(first value, length) of every nonempty monotone subsequence."""
    found = []
    for size in range(1, len(values) + 1):
        for picks in itertools.combinations(values, size):
            pairs = zip(picks, picks[1:])
            if all(a > b for a, b in pairs) if decreasing else all(a < b for a, b in pairs):
                found.append((picks[0], size))
    return found


def longest_ascent_pair_exhaustive(pi: "PermutationView | Sequence[int]") -> int:
    """L(pi) by listing every decreasing and every increasing subsequence.

    Raises:
        InfeasibleScaleError: If N > EXHAUSTIVE_MAX_N.
    """
    view = PermutationView.of(pi)
    N = len(view)
    if N > EXHAUSTIVE_MAX_N:
        raise InfeasibleScaleError(
            f"exhaustive ascent pairs are limited to N <= {EXHAUSTIVE_MAX_N}", N=N,
        )
    if not N:
        return 0
    # best_from[v]: longest increasing subsequence whose first value is >= v
    best_from = [0] * (N + 2)
    for first, size in _monotone_runs(view.values, decreasing=False):
        best_from[first] = max(best_from[first], size)
    for v in range(N, 0, -1):
        best_from[v] = max(best_from[v], best_from[v + 1])
    return max(
        size + best_from[top] - 1
        for top, size in _monotone_runs(view.values, decreasing=True)
    )


def _starting_lengths_dp(values: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Longest decreasing and increasing subsequences starting at each position."""
    N = len(values)
    down = np.ones(N, dtype=np.int64)
    up = np.ones(N, dtype=np.int64)
    for i in range(N - 2, -1, -1):
        later, v = values[i + 1:], values[i]
        smaller, larger = down[i + 1:][later < v], up[i + 1:][later > v]
        if smaller.size:
            down[i] = smaller.max() + 1
        if larger.size:
            up[i] = larger.max() + 1
    return down, up


def longest_ascent_pair_dp(pi: "PermutationView | Sequence[int]") -> int:
    """L(pi) = max(max_i D(i) + I(i) - 1, max_{pi(i) < pi(j)} D(i) + I(j) - 1)
    where D(i), I(i) are the longest decreasing and increasing subsequences
    starting at position i. Quadratic in N.

    Raises:
        InfeasibleScaleError: If N > DP_MAX_N.
    """
    values = np.asarray(PermutationView.of(pi).values, dtype=np.int64)
    N = len(values)
    if N > DP_MAX_N:
        raise InfeasibleScaleError(f"the quadratic tier is limited to N <= {DP_MAX_N}", N=N)
    if not N:
        return 0
    down, up = _starting_lengths_dp(values)
    best = int((down + up).max()) - 1
    for i in range(N):
        larger = up[values > values[i]]
        if larger.size:
            best = max(best, int(down[i] + larger.max()) - 1)
    return best


def _patience_lengths(sequence: Sequence[int]) -> list[int]:
    """Length of the longest strictly increasing subsequence ending at each entry."""
    tails: list[int] = []
    lengths = []
    for x in sequence:
        k = bisect.bisect_left(tails, x)
        if k == len(tails):
            tails.append(x)
        else:
            tails[k] = x
        lengths.append(k + 1)
    return lengths


def starting_lengths(values: Sequence[int]) -> tuple[np.ndarray, np.ndarray]:
    """D and I for every position, each by one patience-sorting pass read
    from the right.
    """
    backwards = list(values)[::-1]
    down = np.asarray(_patience_lengths(backwards), dtype=np.int64)[::-1]
    up = np.asarray(_patience_lengths([-v for v in backwards]), dtype=np.int64)[::-1]
    return down, up


def longest_ascent_pair_fast(pi: "PermutationView | Sequence[int] | np.ndarray") -> int:
    """L(pi) in O(N log N).

    The cross term max_{pi(i) < pi(j)} D(i) + I(j) is a sweep over values:
    with D and I indexed by value, it is max_v D[v] + max_{w > v} I[w].
    Plain integer sequences are trusted to be permutations of 1..N.

    Raises:
        InfeasibleScaleError: If N > FAST_MAX_N.
    """
    values = pi.values if isinstance(pi, PermutationView) else pi
    N = len(values)
    if N > FAST_MAX_N:
        raise InfeasibleScaleError(f"the fast tier is limited to N <= {FAST_MAX_N}", N=N)
    if not N:
        return 0
    positions = np.asarray(values, dtype=np.int64) - 1
    down, up = starting_lengths(positions.tolist())
    best = int((down + up).max()) - 1
    if N > 1:
        down_by_value = np.empty(N, dtype=np.int64)
        up_by_value = np.empty(N, dtype=np.int64)
        down_by_value[positions] = down
        up_by_value[positions] = up
        larger = np.maximum.accumulate(up_by_value[::-1])[::-1]
        best = max(best, int((down_by_value[:-1] + larger[1:]).max()) - 1)
    return best


def ascent_census(N: int, tier: str = "dp") -> Counter:
    """Counts of L over all of S_N.

    Raises:
        InfeasibleScaleError: If N > CENSUS_MAX_N.
    """
    if N < 0:
        raise PreconditionError(f"N must be nonnegative, got {N}")
    if N > CENSUS_MAX_N:
        raise InfeasibleScaleError(f"census is limited to N <= {CENSUS_MAX_N}", N=N)
    statistic = TIERS[tier]
    census = Counter(statistic(pi) for pi in itertools.permutations(range(1, N + 1)))
    logger.info("census of S_%d: %d permutations", N, math.factorial(N))
    return census


TIERS = {
    "exhaustive": longest_ascent_pair_exhaustive,
    "dp": longest_ascent_pair_dp,
    "fast": longest_ascent_pair_fast,
}
