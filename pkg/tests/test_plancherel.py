import itertools
import json
import math
import random
import unittest
from fractions import Fraction

from schurlab.common.errors import InfeasibleScaleError, PreconditionError
from schurlab.partitions import StrictPartition, enumerate_strict
from schurlab.plancherel import (
    PermutationView,
    SampleRun,
    ascent_census,
    exact_lambda1_distribution,
    kolmogorov_distance,
    law_mean,
    longest_ascent_pair_dp,
    longest_ascent_pair_exhaustive,
    longest_ascent_pair_fast,
    mc_poissonized,
    mc_scaled_l,
    p_psp,
    p_spl,
    poissonized_lambda1_distribution,
)

F = Fraction
SP = StrictPartition
EXAMPLE = (4, 7, 1, 9, 6, 3, 5, 8, 2)
TIERS = (longest_ascent_pair_exhaustive, longest_ascent_pair_dp, longest_ascent_pair_fast)


class TestShiftedPlancherel(unittest.TestCase):

    def test_point_masses(self):
        self.assertEqual(p_spl(SP((4,)), 4), F(1, 3))
        self.assertEqual(p_spl(SP((3, 1)), 4), F(2, 3))

    def test_sums_to_one(self):
        for N in range(1, 13):
            self.assertEqual(sum(p_spl(lam, N) for lam in enumerate_strict(N)), 1)

    def test_size_mismatch(self):
        with self.assertRaises(PreconditionError):
            p_spl(SP((3, 1)), 5)

    def test_poissonized(self):
        self.assertAlmostEqual(p_psp(SP(()), 1.5), math.exp(-1.5), delta=1e-15)
        self.assertAlmostEqual(p_psp(SP((1,)), 1.0), math.exp(-1.0), delta=1e-15)
        # (3,1): e^-xi xi^4 2^2 (2/24)^2
        self.assertAlmostEqual(
            p_psp(SP((3, 1)), 2.0), math.exp(-2.0) * 16 * 4 / 144, delta=1e-14,
        )
        total = sum(p_psp(lam, 2.0) for n in range(31) for lam in enumerate_strict(n))
        self.assertAlmostEqual(total, 1.0, delta=1e-10)
        with self.assertRaises(PreconditionError):
            p_psp(SP((1,)), 0.0)

    def test_lambda1_law(self):
        self.assertEqual(exact_lambda1_distribution(4), {4: F(1, 3), 3: F(2, 3)})
        self.assertEqual(exact_lambda1_distribution(1), {1: 1})
        law = exact_lambda1_distribution(20)
        self.assertEqual(sum(law.values()), 1)
        with self.assertRaises(InfeasibleScaleError):
            exact_lambda1_distribution(41)

    def test_poissonized_law(self):
        law, tail = poissonized_lambda1_distribution(3.0, 30)
        self.assertLess(tail, 1e-12)
        self.assertAlmostEqual(sum(law.values()) + tail, 1.0, delta=1e-12)
        self.assertAlmostEqual(law[0], math.exp(-3.0), delta=1e-15)


class TestAscentPairs(unittest.TestCase):

    def test_example(self):
        for tier in TIERS:
            self.assertEqual(tier(EXAMPLE), 5, tier.__name__)

    def test_small_cases(self):
        for tier in TIERS:
            self.assertEqual(tier((1,)), 1)
            self.assertEqual(tier((2, 1)), 2)
            self.assertEqual(tier(()), 0)
            self.assertEqual(tier(tuple(range(1, 8))), 7)
            self.assertEqual(tier(tuple(range(9, 0, -1))), 9)

    def test_long_monotone(self):
        N = 3000
        self.assertEqual(longest_ascent_pair_fast(list(range(1, N + 1))), N)
        self.assertEqual(longest_ascent_pair_fast(list(range(N, 0, -1))), N)
        self.assertEqual(longest_ascent_pair_dp(list(range(N, 0, -1))), N)

    def test_tiers_agree_exhaustively(self):
        for n in range(1, 7):
            for pi in itertools.permutations(range(1, n + 1)):
                expected = longest_ascent_pair_exhaustive(pi)
                self.assertEqual(longest_ascent_pair_dp(pi), expected, pi)
                self.assertEqual(longest_ascent_pair_fast(pi), expected, pi)

    def test_dp_and_fast_agree_on_random(self):
        rng = random.Random(20240611)
        for _ in range(20):
            pi = list(range(1, 1001))
            rng.shuffle(pi)
            self.assertEqual(longest_ascent_pair_dp(pi), longest_ascent_pair_fast(pi))

    def test_census_matches_measure(self):
        for N in range(1, 9):
            census = ascent_census(N)
            law = exact_lambda1_distribution(N)
            self.assertEqual(
                dict(census), {h: p * math.factorial(N) for h, p in law.items()},
            )

    def test_guards(self):
        with self.assertRaises(InfeasibleScaleError):
            longest_ascent_pair_exhaustive(tuple(range(1, 11)))
        with self.assertRaises(InfeasibleScaleError):
            ascent_census(11)
        with self.assertRaises(PreconditionError):
            PermutationView((1, 1, 2))


class TestSampling(unittest.TestCase):

    def test_trivial_size(self):
        run = mc_scaled_l(1, 50, seed=7)
        self.assertEqual(run.histogram, {1: 50})

    def test_determinism(self):
        first = mc_scaled_l(30, 200, seed=12345)
        second = mc_scaled_l(30, 200, seed=12345)
        self.assertEqual(first.histogram, second.histogram)
        self.assertEqual(first.to_csv(), second.to_csv())
        self.assertNotEqual(first.histogram, mc_scaled_l(30, 200, seed=54321).histogram)

    def test_threads_do_not_change_the_histogram(self):
        serial = mc_scaled_l(25, 300, seed=99, threads=1)
        parallel = mc_scaled_l(25, 300, seed=99, threads=3)
        self.assertEqual(serial.histogram, parallel.histogram)

    def test_poissonized_near_zero(self):
        run = mc_poissonized(1e-3, 100, seed=3)
        self.assertGreaterEqual(run.histogram.get(0, 0), 90)

    def test_poissonized_mean_matches_exact_law(self):
        law, tail = poissonized_lambda1_distribution(25.0, 60)
        self.assertLess(tail, 1e-6)
        run = mc_poissonized(25.0, 2000, seed=2024)
        self.assertAlmostEqual(run.mean(), law_mean(law), delta=0.25)

    def test_serialisation(self):
        run = SampleRun("N", 8.0, 4, 11, {9: 2, 7: 2})
        self.assertEqual(run.to_csv(), "value,count\r\n7,2\r\n9,2\r\n")
        document = json.loads(run.to_json())
        self.assertEqual(document["histogram"], [[7, 2], [9, 2]])
        self.assertEqual(document["seed"], 11)
        self.assertEqual(document["num_samples"], 4)

    def test_kolmogorov_distance(self):
        run = SampleRun("N", 8.0, 4, 0, {7: 2, 9: 2})
        self.assertAlmostEqual(run.empirical_cdf(0.0), 0.5)
        self.assertAlmostEqual(kolmogorov_distance(run, [(0.0, 0.4), (1.0, 0.9)]), 0.1)

    def test_histogram_must_match_count(self):
        with self.assertRaises(PreconditionError):
            SampleRun("N", 5, 3, 0, {1: 2})


if __name__ == "__main__":
    unittest.main()
