"""plancherel.sampling

Seeded Monte Carlo for the longest ascent pair.

Random streams are numpy PCG64 generators. Samples are drawn in fixed
chunks of CHUNK_SIZE; chunk c uses SeedSequence(seed, spawn_key=(c,)), so
the histogram depends only on the seed and not on how chunks are spread
over workers. Permutations come from Generator.permutation, a
Fisher-Yates shuffle.
"""

import json
import logging
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Literal

import numpy as np

from schurlab.common.errors import PreconditionError
from schurlab.common.utils.tables import rows_to_csv

from .ascent import longest_ascent_pair_fast

logger = logging.getLogger(__name__)

CHUNK_SIZE = 64
SEED_MAX = 2 ** 64 - 1

ScaleKind = Literal["N", "xi"]


@dataclass(frozen=True)
class SampleRun:
    """A histogram of L over seeded samples at a fixed N or a Poisson(xi) size."""
    kind: ScaleKind
    scale: float
    num_samples: int
    seed: int
    histogram: dict[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if sum(self.histogram.values()) != self.num_samples:
            raise PreconditionError(
                f"histogram holds {sum(self.histogram.values())} samples, "
                f"expected {self.num_samples}",
            )
        object.__setattr__(self, "histogram", dict(sorted(self.histogram.items())))

    def mean(self) -> float:
        return sum(v * c for v, c in self.histogram.items()) / self.num_samples

    def centre(self) -> float:
        """2 sqrt(2 N), the first-order growth of L."""
        return 2.0 * math.sqrt(2.0 * self.scale)

    def width(self) -> float:
        """(2 N)^(1/6), the fluctuation scale of L."""
        return (2.0 * self.scale) ** (1.0 / 6.0)

    def scaled(self, value: int) -> float:
        return (value - self.centre()) / self.width()

    def empirical_cdf(self, s: float) -> float:
        """Fraction of samples with (L - 2 sqrt(2 N)) / (2 N)^(1/6) < s."""
        below = sum(c for v, c in self.histogram.items() if self.scaled(v) < s)
        return below / self.num_samples

    def rows(self) -> list[dict[str, int]]:
        return [{"value": v, "count": c} for v, c in self.histogram.items()]

    def to_csv(self) -> str:
        return rows_to_csv(("value", "count"), self.rows())

    def to_json(self) -> str:
        document = {
            "kind": self.kind,
            "scale": self.scale,
            "num_samples": self.num_samples,
            "seed": self.seed,
            "histogram": [[v, c] for v, c in self.histogram.items()],
        }
        return json.dumps(document, indent=2) + "\n"


def chunk_generator(seed: int, chunk: int) -> np.random.Generator:
    """The PCG64 stream of one chunk."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(chunk,))))


def _chunks(num_samples: int) -> list[tuple[int, int]]:
    return [
        (c, min(CHUNK_SIZE, num_samples - c * CHUNK_SIZE))
        for c in range(math.ceil(num_samples / CHUNK_SIZE))
    ]


def _fixed_size_chunk(N: int, seed: int, chunk: int, count: int) -> Counter:
    rng = chunk_generator(seed, chunk)
    return Counter(longest_ascent_pair_fast(rng.permutation(N) + 1) for _ in range(count))


def _poissonized_chunk(xi: float, seed: int, chunk: int, count: int) -> Counter:
    rng = chunk_generator(seed, chunk)
    histogram = Counter()
    for _ in range(count):
        N = int(rng.poisson(xi))
        histogram[longest_ascent_pair_fast(rng.permutation(N) + 1)] += 1
    return histogram


def _run(worker, scale, num_samples: int, seed: int, threads: int) -> Counter:
    chunks = _chunks(num_samples)
    histogram = Counter()
    if threads <= 1 or len(chunks) <= 1:
        for chunk, count in chunks:
            histogram.update(worker(scale, seed, chunk, count))
        return histogram
    with ProcessPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(worker, scale, seed, chunk, count) for chunk, count in chunks]
        for future in futures:
            histogram.update(future.result())
    return histogram


def _check(num_samples: int, seed: int) -> None:
    if num_samples < 1:
        raise PreconditionError(f"num_samples must be positive, got {num_samples}")
    if not 0 <= seed <= SEED_MAX:
        raise PreconditionError(f"seed must be a 64-bit unsigned integer, got {seed}")


def mc_scaled_l(N: int, num_samples: int, seed: int, threads: int = 1) -> SampleRun:
    """Histogram of L over uniform permutations of size N."""
    if N < 1:
        raise PreconditionError(f"N must be positive, got {N}")
    _check(num_samples, seed)
    logger.info("sampling L at N=%d: %d samples, seed %d", N, num_samples, seed)
    histogram = _run(_fixed_size_chunk, N, num_samples, seed, threads)
    return SampleRun("N", N, num_samples, seed, dict(histogram))


def mc_poissonized(xi: float, num_samples: int, seed: int, threads: int = 1) -> SampleRun:
    """Histogram of L over uniform permutations of Poisson(xi) size; the
    law of lambda_1 under the poissonized shifted Plancherel measure.
    """
    if xi <= 0:
        raise PreconditionError(f"xi must be positive, got {xi}")
    _check(num_samples, seed)
    logger.info("sampling L at xi=%g: %d samples, seed %d", xi, num_samples, seed)
    histogram = _run(_poissonized_chunk, float(xi), num_samples, seed, threads)
    return SampleRun("xi", float(xi), num_samples, seed, dict(histogram))


def kolmogorov_distance(run: SampleRun, f2_table: Iterable[tuple[float, float]]) -> float:
    """max over the grid of |empirical CDF(s) - F2(s)| for the scaled L."""
    return max(abs(run.empirical_cdf(s) - f) for s, f in f2_table)

