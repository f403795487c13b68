import itertools
import math
import unittest
from fractions import Fraction

import numpy as np
from scipy import special

from schurlab.common.errors import (
    CertificationError,
    ModeMismatchError,
    PreconditionError,
    WindowOverflowError,
)
from schurlab.correlation import (
    BESSEL,
    CONVOLUTION,
    CorrelationQuery,
    KernelSpec,
    alpha_kernel,
    assemble_m,
    bessel_j,
    bessel_j_series,
    bessel_j_table,
    bessel_tail_bound,
    epsilon,
    j_coeffs,
    kernel_entry,
    rho_bruteforce,
    rho_pfaffian,
    shifted_schur_probability,
)
from schurlab.partitions import StrictPartition
from schurlab.schurq import exponential, finite_vars

F = Fraction
SMALL = (F(1, 10), F(1, 20))


def exact_kernel(xs, ys, T=40, k_tail=None) -> KernelSpec:
    return KernelSpec(finite_vars(xs), finite_vars(ys), T, "exact", k_tail)


class TestBessel(unittest.TestCase):

    def test_table_matches_scipy(self):
        for x in (0.5, 3.0, 8.0, 25.0):
            table = bessel_j_table(x, 60)
            for n in range(61):
                self.assertAlmostEqual(table[n], special.jv(n, x), delta=1e-13)

    def test_series_oracle(self):
        for x in (0.25, 2.0, 7.5):
            for n in (-5, 0, 1, 4, 12):
                self.assertAlmostEqual(bessel_j_series(n, x), special.jv(n, x), delta=1e-14)
                self.assertAlmostEqual(bessel_j(n, x), bessel_j_series(n, x), delta=1e-13)

    def test_negative_order_sign(self):
        table = bessel_j_table(3.0, 10)
        self.assertEqual(bessel_j(-3, 3.0, table), -table[3])
        self.assertEqual(bessel_j(-4, 3.0, table), table[4])

    def test_zero_argument(self):
        table = bessel_j_table(0.0, 5)
        self.assertEqual(list(table), [1.0, 0.0, 0.0, 0.0, 0.0, 0.0])

    def test_tail_bound_dominates(self):
        x = 5.0
        for n in range(0, 60):
            self.assertGreaterEqual(bessel_tail_bound(n, x), abs(special.jv(n, x)))
        self.assertEqual(bessel_tail_bound(3, x), 1.0)
        self.assertLess(bessel_tail_bound(40, x), 1e-20)

    def test_series_range(self):
        with self.assertRaises(PreconditionError):
            bessel_j_series(1, 11.0)


class TestJCoefficients(unittest.TestCase):

    def test_only_x(self):
        x = F(1, 3)
        a = j_coeffs(exact_kernel([x], [], T=10))
        self.assertEqual(a.coeff(0), 1)
        for n in range(1, 11):
            self.assertEqual(a.coeff(n), 2 * x ** n)
            self.assertEqual(a.coeff(-n), 0)

    def test_only_y(self):
        y = F(1, 3)
        a = j_coeffs(exact_kernel([], [y], T=10))
        self.assertEqual(a.coeff(0), 1)
        for n in range(1, 11):
            self.assertEqual(a.coeff(-n), (-1) ** n * 2 * y ** n)
            self.assertEqual(a.coeff(n), 0)

    def test_one_sided_tables_are_exact(self):
        ks = exact_kernel([F(1, 3)], [], T=10)
        self.assertEqual(set(ks.table.errors), {0.0})

    def test_bessel_route(self):
        ks = KernelSpec(exponential(4), exponential(4), 40, "approx")
        self.assertEqual(ks.route, BESSEL)
        a = j_coeffs(ks)
        x = 2 * math.sqrt(8)
        for n in range(-40, 41):
            self.assertAlmostEqual(a.coeff(n), special.jv(n, x), delta=1e-12)

    def test_exact_exponential_is_convolution(self):
        # xi = 8 gives p1 = 2 and J_n(8)
        ks = KernelSpec(exponential(8), exponential(8), 30, "exact")
        self.assertEqual(ks.route, CONVOLUTION)
        a = j_coeffs(ks)
        for n in range(-30, 31):
            self.assertIsInstance(a.coeff(n), Fraction)
            self.assertLessEqual(
                abs(float(a.coeff(n)) - special.jv(n, 8.0)),
                ks.table.error(n) + 1e-13,
            )

    def test_convolution_errors_cover_truth(self):
        x, y = F(1, 2), F(1, 3)
        ks = exact_kernel([x], [y], T=8)
        wide = exact_kernel([x], [y], T=40)
        for n in range(-8, 9):
            gap = abs(float(ks.table.a(n) - wide.table.a(n)))
            self.assertLessEqual(gap, ks.table.error(n) + wide.table.error(n))

    def test_bessel_route_rejected_for_exact(self):
        with self.assertRaises(PreconditionError):
            KernelSpec(exponential(8), exponential(8), 30, "exact", route=BESSEL)


class TestEpsilon(unittest.TestCase):

    def test_sign_patterns(self):
        self.assertEqual(epsilon(3, 5), 1)
        self.assertEqual(epsilon(3, -4), 1)
        self.assertEqual(epsilon(3, -3), -1)
        self.assertEqual(epsilon(-3, -4), -1)
        self.assertEqual(epsilon(-2, -4), 1)

    def test_mixed_sign_is_antisymmetric_extension(self):
        ks = exact_kernel(SMALL, SMALL)
        for u, v in [(-1, 2), (-2, 3), (-3, 1)]:
            self.assertEqual(kernel_entry(ks, u, v).value, -kernel_entry(ks, v, u).value)

    def test_zero_rejected(self):
        with self.assertRaises(PreconditionError):
            epsilon(0, 2)


class TestKernel(unittest.TestCase):

    def test_empty_specializations(self):
        ks = exact_kernel([], [], T=10)
        for u in range(1, 6):
            for v in (-5, -2, 1, 4):
                self.assertEqual(kernel_entry(ks, u, v).value, 0)

    def test_single_point_small_x(self):
        x = F(1, 10)
        ks = exact_kernel([x], [x])
        value, error = kernel_entry(ks, 1, -1)
        z = (1 + x * x) / (1 - x * x)
        self.assertLessEqual(abs(value - 2 * x * x / z), F(error) + F(1, 10 ** 30))

    def test_window_overflow(self):
        ks = exact_kernel(SMALL, SMALL, T=10)
        kernel_entry(ks, 5, -5)
        with self.assertRaises(WindowOverflowError):
            kernel_entry(ks, 6, -1)

    def test_tolerance(self):
        ks = KernelSpec(exponential(4), exponential(4), 40, "approx")
        with self.assertRaises(CertificationError):
            kernel_entry(ks, 1, -1, tolerance=0.0)
        self.assertLess(kernel_entry(ks, 1, -1, tolerance=1e-8).error, 1e-8)

    def test_mode_mismatch(self):
        with self.assertRaises(ModeMismatchError):
            KernelSpec(finite_vars([0.1]), finite_vars([F(1, 10)]), 20, "exact")

    def test_bessel_kernel_matches_double_contour(self):
        # coefficient of z^u w^v in J(z)J(w)(z-w)/(2(z+w)) on |w| < |z|
        xi = 4.0
        x = 2 * math.sqrt(2 * xi)
        n, radius = 256, 0.8
        theta = 2 * np.pi * np.arange(n) / n
        z = np.exp(1j * theta)[:, None]
        w = radius * np.exp(1j * theta)[None, :]

        def J(t):
            return np.exp(0.5 * x * (t - 1 / t))

        grid = np.fft.fft2(0.5 * J(z) * J(w) * (z - w) / (z + w)) / n ** 2
        ks = KernelSpec(exponential(xi), exponential(xi), 60, "approx")
        for u, v in [(1, -1), (2, -1), (3, -2), (2, 3), (-1, -2), (5, -4)]:
            coefficient = grid[u % n, v % n].real / radius ** v
            value, error = kernel_entry(ks, u, v)
            self.assertLess(error, 1e-10)
            self.assertAlmostEqual(value, epsilon(u, v) * coefficient, delta=1e-9)

    def test_bessel_matches_convolution_at_small_xi(self):
        bessel = KernelSpec(exponential(0.25), exponential(0.25), 40, "approx")
        series = KernelSpec(
            exponential(0.25), exponential(0.25), 40, "approx", route=CONVOLUTION,
        )
        self.assertEqual(bessel.route, BESSEL)
        for u, v in [(1, -1), (2, -3), (4, 1), (-2, -5)]:
            self.assertAlmostEqual(
                kernel_entry(bessel, u, v).value,
                kernel_entry(series, u, v).value,
                delta=1e-8,
            )

    def test_exact_and_approx_agree(self):
        exact = exact_kernel(SMALL, SMALL, T=30)
        approx = KernelSpec(finite_vars([0.1, 0.05]), finite_vars([0.1, 0.05]), 30, "approx")
        for u, v in [(1, -1), (3, 2), (-2, -4)]:
            self.assertAlmostEqual(
                float(kernel_entry(exact, u, v).value),
                kernel_entry(approx, u, v).value,
                delta=1e-14,
            )


class TestAssembly(unittest.TestCase):

    def test_single_point(self):
        ks = exact_kernel(SMALL, SMALL)
        m = assemble_m(ks, [3])
        self.assertEqual(m.dim, 2)
        self.assertEqual(m.entry(0, 1), kernel_entry(ks, 3, -3).value)

    def test_two_point_index_pattern(self):
        ks = exact_kernel(SMALL, SMALL)
        m = assemble_m(ks, CorrelationQuery((1, 2)))
        pairs = {
            (0, 1): (2, 1), (0, 2): (2, -1), (0, 3): (2, -2),
            (1, 2): (1, -1), (1, 3): (1, -2), (2, 3): (-1, -2),
        }
        for (i, j), (u, v) in pairs.items():
            self.assertEqual(m.entry(i, j), kernel_entry(ks, u, v).value)

    def test_empty_query(self):
        self.assertEqual(assemble_m(exact_kernel(SMALL, SMALL), []).dim, 0)

    def test_query_validation(self):
        with self.assertRaises(PreconditionError):
            CorrelationQuery((2, 2))
        with self.assertRaises(PreconditionError):
            CorrelationQuery((0,))
        self.assertEqual(CorrelationQuery((1, 3, 2)).ks, (3, 2, 1))


class TestRho(unittest.TestCase):

    def assertCertified(self, pf, bf, slack=F(1, 10 ** 25)):
        gap = abs(F(pf.value) - F(bf.value))
        self.assertLessEqual(gap, F(pf.error) + F(bf.error) + slack)

    def test_empty_set(self):
        ks = exact_kernel(SMALL, SMALL)
        self.assertEqual(rho_pfaffian(ks, []).value, 1)
        value, tail = rho_bruteforce(ks, [], 20)
        self.assertLessEqual(1 - value, F(tail))
        self.assertGreaterEqual(1 - value, 0)

    def test_single_points_one_variable(self):
        ks = exact_kernel([F(1, 10)], [F(1, 10)])
        for k in (1, 2, 3):
            pf = rho_pfaffian(ks, [k])
            bf = rho_bruteforce(ks, [k], 20)
            self.assertLess(bf.error, 1e-12)
            self.assertTrue(0 < bf.value < 1)
            self.assertCertified(pf, bf)
            self.assertEqual(pf.value, kernel_entry(ks, k, -k).value)

    def test_two_points(self):
        ks = exact_kernel(SMALL, SMALL)
        pf = rho_pfaffian(ks, [2, 1])
        bf = rho_bruteforce(ks, [2, 1], 20)
        self.assertLess(abs(float(pf.value - bf.value)), 1e-9)
        self.assertCertified(pf, bf)

    def test_oracle_equivalence(self):
        ks = KernelSpec(finite_vars([0.1, 0.05]), finite_vars([0.1, 0.05]), 40, "approx")
        for size in (1, 2, 3):
            for points in itertools.combinations(range(1, 7), size):
                pf = rho_pfaffian(ks, points)
                bf = rho_bruteforce(ks, points, 24)
                self.assertLessEqual(pf.error + bf.error, 1e-9, points)
                self.assertLessEqual(
                    abs(pf.value - bf.value), pf.error + bf.error + 1e-15, points,
                )

    def test_monotone_in_containment(self):
        ks = exact_kernel(SMALL, SMALL)
        one = rho_pfaffian(ks, [1])
        both = rho_pfaffian(ks, [2, 1])
        self.assertLessEqual(both.value, one.value + F(one.error) + F(both.error))
        self.assertGreaterEqual(both.value + F(both.error), 0)

    def test_exchange_symmetry(self):
        xs, ys = SMALL, (F(1, 5), F(1, 7))
        forward = rho_bruteforce(exact_kernel(xs, ys), [2, 1], 16)
        backward = rho_bruteforce(exact_kernel(ys, xs), [2, 1], 16)
        self.assertEqual(forward.value, backward.value)

    def test_deep_sets_are_rare(self):
        xs = [F(1, d) for d in (10, 11, 12, 13, 14)]
        bf = rho_bruteforce(exact_kernel(xs, xs), [5, 4, 3, 2, 1], 15)
        self.assertTrue(0 < bf.value < 1e-10)

    def test_cutoff_precondition(self):
        with self.assertRaises(PreconditionError):
            rho_bruteforce(exact_kernel(SMALL, SMALL), [3, 2], 4)

    def test_needs_variables(self):
        ks = KernelSpec(exponential(8), exponential(8), 20, "exact")
        with self.assertRaises(PreconditionError):
            rho_bruteforce(ks, [1], 10)

    def test_alpha_kernel_is_repeated_variable(self):
        ks = alpha_kernel(2, F(1, 10), T=30)
        twin = exact_kernel([F(1, 10), F(1, 10)], [F(1, 10), F(1, 10)], T=30)
        self.assertEqual(rho_pfaffian(ks, [2, 1]).value, rho_pfaffian(twin, [2, 1]).value)
        self.assertCertified(rho_pfaffian(ks, [1]), rho_bruteforce(ks, [1], 20))


class TestPointProbabilities(unittest.TestCase):

    def test_one_variable(self):
        ks = exact_kernel([F(1, 2)], [F(1, 2)], T=10)
        self.assertEqual(shifted_schur_probability(StrictPartition(()), ks), F(3, 5))
        self.assertEqual(shifted_schur_probability(StrictPartition((1,)), ks), F(3, 10))
        self.assertEqual(shifted_schur_probability(StrictPartition((2, 1)), ks), 0)


if __name__ == "__main__":
    unittest.main()
