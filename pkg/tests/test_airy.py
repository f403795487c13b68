import math
import unittest

import numpy as np
from scipy import special

from schurlab.common.errors import PreconditionError
from schurlab.airy import (
    QuadratureRule,
    airy,
    airy_ai,
    airy_arrays,
    airy_asymptotic,
    airy_kernel,
    airy_kernel_integral,
    airy_kernel_matrix,
    airy_maclaurin,
    bessel_airy_probe,
    correlation_probe,
    determinant_probe,
    edge_centre,
    edge_point,
    edge_width,
    f2,
    f2_mean,
    s_grid,
)


def effective(xi: float, x: float) -> float:
    """The scaled coordinate actually probed after flooring."""
    return (edge_point(xi, x) - edge_centre(xi)) / edge_width(xi)


class TestAiryFunction(unittest.TestCase):

    def test_values_at_zero(self):
        ai, aip = airy(0.0)
        self.assertAlmostEqual(ai, 0.355028053887817, delta=1e-14)
        self.assertAlmostEqual(aip, -0.258819403792807, delta=1e-14)

    def test_matches_scipy(self):
        for x in (-30.0, -12.5, -7.5, -3.0, -0.4, 1.0, 4.5, 7.2, 15.0, 30.0):
            ai, aip = airy(x)
            ref_ai, ref_aip, _, _ = special.airy(x)
            if x > 0:
                self.assertAlmostEqual(ai / ref_ai, 1.0, delta=1e-10)
                self.assertAlmostEqual(aip / ref_aip, 1.0, delta=1e-10)
            else:
                self.assertAlmostEqual(ai, ref_ai, delta=1e-11)
                self.assertAlmostEqual(aip, ref_aip, delta=1e-10)

    def test_expansions_overlap(self):
        for x in (7.0, 8.0):
            near, far = airy_maclaurin(x), airy_asymptotic(x)
            self.assertAlmostEqual(near.ai / far.ai, 1.0, delta=1e-9)
            self.assertAlmostEqual(near.ai_prime / far.ai_prime, 1.0, delta=1e-9)
        for x in (-7.0, -8.0):
            near, far = airy_maclaurin(x), airy_asymptotic(x)
            self.assertAlmostEqual(near.ai, far.ai, delta=1e-10)
            self.assertAlmostEqual(near.ai_prime, far.ai_prime, delta=1e-9)

    def test_differential_equation(self):
        h = 1e-4
        for x in (-9.0, -5.0, -1.0, 0.5, 3.0, 7.5):
            second = (airy(x + h).ai_prime - airy(x - h).ai_prime) / (2 * h)
            self.assertAlmostEqual(second, x * airy_ai(x), delta=1e-7)

    def test_decay(self):
        self.assertLess(airy_ai(10.0), 1e-9)
        self.assertGreater(airy_ai(10.0), 0.0)

    def test_argument_range(self):
        with self.assertRaises(PreconditionError):
            airy(41.0)
        with self.assertRaises(PreconditionError):
            airy(float("nan"))
        ai, aip = airy_arrays(np.array([0.0, 50.0]))
        self.assertEqual((ai[1], aip[1]), (0.0, 0.0))
        self.assertAlmostEqual(ai[0], 0.355028053887817, delta=1e-14)


class TestAiryKernel(unittest.TestCase):

    def test_symmetric(self):
        for x, y in ((-2.0, 1.0), (0.3, -4.1), (2.5, 2.0)):
            self.assertAlmostEqual(airy_kernel(x, y), airy_kernel(y, x), delta=1e-15)

    def test_integral_form(self):
        grid = (-5.0, -2.5, -1.0, 0.0, 1.0, 2.0)
        for x in grid:
            for y in grid:
                self.assertAlmostEqual(airy_kernel(x, y), airy_kernel_integral(x, y), delta=1e-7)

    def test_diagonal_positive_and_continuous(self):
        for x in (-6.0, -1.0, 0.0, 2.0):
            self.assertGreater(airy_kernel(x, x), 0.0)
            self.assertAlmostEqual(airy_kernel(x, x), airy_kernel(x, x + 1e-3), delta=1e-3)

    def test_matrix_agrees_with_entries(self):
        xs = [-3.0, -0.5, 1.5]
        matrix = airy_kernel_matrix(xs)
        for i, x in enumerate(xs):
            for j, y in enumerate(xs):
                self.assertAlmostEqual(matrix[i, j], airy_kernel(x, y), delta=1e-14)


class TestTracyWidom(unittest.TestCase):

    def test_quadrature_rule(self):
        rule = QuadratureRule.on(-2.0, 30)
        self.assertTrue(np.all(rule.nodes > -2.0))
        self.assertTrue(np.all(np.diff(rule.nodes) > 0))
        # int_s^inf e^{-(x-s)} dx = 1
        self.assertAlmostEqual(float(np.sum(rule.weights * np.exp(-(rule.nodes + 2.0)))), 1.0, delta=1e-4)

    def test_right_tail(self):
        self.assertGreaterEqual(f2(8.0).value, 1.0 - 1e-8)
        self.assertLessEqual(f2(8.0).value, 1.0 + 1e-8)

    def test_left_tail(self):
        self.assertLess(abs(f2(-9.0).value), 1e-4)

    def test_known_value(self):
        self.assertAlmostEqual(f2(0.0).value, 0.9694, delta=2e-3)

    def test_monotone(self):
        values = [f2(s, 40).value for s in s_grid(-5.0, 2.0, 1.0)]
        self.assertTrue(all(a < b for a, b in zip(values, values[1:])))

    def test_self_convergence(self):
        for s in (-4.0, -2.0, 0.0):
            self.assertLess(f2(s, 40).convergence, 1e-6)

    def test_mean(self):
        mean = f2_mean(-8.0, 4.0, 0.1)
        self.assertGreaterEqual(mean, -1.80)
        self.assertLessEqual(mean, -1.74)

    def test_guards(self):
        with self.assertRaises(PreconditionError):
            f2(-13.0)
        with self.assertRaises(PreconditionError):
            f2(0.0, 10)
        with self.assertRaises(PreconditionError):
            s_grid(1.0, 0.0, 0.1)

    def test_grid_has_no_drift(self):
        grid = s_grid(-8.0, 4.0, 0.05)
        self.assertEqual(len(grid), 241)
        self.assertEqual(grid[0], -8.0)
        self.assertEqual(grid[-1], 4.0)


class TestEdgeLimit(unittest.TestCase):
    XI = 1e5

    def test_mixed_block_approaches_airy(self):
        for x in (-1.0, 0.0, 1.0):
            for y in (-1.0, 0.5):
                probe = bessel_airy_probe(self.XI, x, y)
                target = airy_kernel(effective(self.XI, x), effective(self.XI, y))
                self.assertAlmostEqual(probe.mixed, target, delta=0.05)

    def test_same_sign_blocks_vanish(self):
        probe = bessel_airy_probe(self.XI, -1.0, 0.5)
        self.assertLess(abs(probe.plus_plus), 0.05)
        self.assertLess(abs(probe.minus_minus), 0.05)

    def test_one_point_density(self):
        x = -1.0
        scaled, _ = correlation_probe(self.XI, [x])
        target = airy_kernel(effective(self.XI, x), effective(self.XI, x))
        self.assertAlmostEqual(scaled, target, delta=0.05)

    def test_determinant_probe(self):
        bessel, airy_det = determinant_probe(self.XI, [-2.0, 0.0])
        self.assertAlmostEqual(airy_det, 0.0132, delta=2e-3)
        self.assertTrue(math.isfinite(bessel))

    def test_edge_geometry(self):
        self.assertEqual(edge_point(8.0, 0.0), 8)
        self.assertAlmostEqual(edge_width(32.0), 2.0, delta=1e-12)

    def test_small_xi_rejected(self):
        with self.assertRaises(PreconditionError):
            bessel_airy_probe(1.0, -5.0, 0.0)
        with self.assertRaises(PreconditionError):
            correlation_probe(1.0, [0.0, 0.1])


if __name__ == "__main__":
    unittest.main()
