import math
import random
import unittest
from fractions import Fraction

import numpy as np
import sympy

from schurlab.common.errors import (
    DivergentSpecializationError,
    InfeasibleScaleError,
    PreconditionError,
)
from schurlab.partitions import StrictPartition, enumerate_strict, g_formula
from schurlab.schurq import (
    SkewMatrix,
    alpha,
    cauchy_graded,
    exponential,
    finite_vars,
    pfaffian,
    pfaffian_with_sensitivity,
    principal,
    q_coeffs,
    q_exponential_closed_form,
    q_rs,
    schur_p,
    schur_q,
    schur_q_genfun_oracle,
    z_ss,
)

F = Fraction
SP = StrictPartition


def random_skew(rng: random.Random, dim: int) -> SkewMatrix:
    return SkewMatrix.from_function(
        dim, lambda i, j: F(rng.randint(-6, 6), rng.randint(1, 4)),
    )


def exact_det(matrix: SkewMatrix) -> Fraction:
    det = sympy.Rational(sympy.Matrix(matrix.to_dense()).det())
    return F(int(det.p), int(det.q))


class TestSpecializations(unittest.TestCase):

    def test_finite_vars_power_sums(self):
        xs = [F(1, 2), F(-1, 3), F(1, 5)]
        spec = finite_vars(xs)
        self.assertEqual(spec.mode, "exact")
        for k in range(1, 11):
            self.assertEqual(spec.p(k), sum(x ** k for x in xs))

    def test_exponential(self):
        spec = exponential(8)
        self.assertEqual(spec.mode, "exact")
        self.assertEqual(spec.p(1), 2)
        self.assertEqual(spec.p(2), 0)
        approx = exponential(3)
        self.assertEqual(approx.mode, "approx")
        self.assertAlmostEqual(approx.p(1), math.sqrt(1.5))

    def test_alpha_and_principal(self):
        spec = alpha(3, F(1, 4))
        self.assertEqual(spec.p(2), 3 * F(1, 16))
        t = F(1, 3)
        finite = principal(t, 4)
        self.assertEqual(finite.p(2), sum(t ** (2 * j) for j in range(1, 5)))
        infinite = principal(t)
        self.assertEqual(infinite.p(1), t / (1 - t))
        with self.assertRaises(PreconditionError):
            alpha(2, F(1))


class TestQCoefficients(unittest.TestCase):

    def test_single_variable(self):
        x = F(2, 5)
        q = q_coeffs(finite_vars([x]), 8)
        self.assertEqual(q[0], 1)
        for n in range(1, 9):
            self.assertEqual(q[n], 2 * x ** n)

    def test_exponential(self):
        q = q_coeffs(exponential(8), 6)
        # sqrt(2 xi) = 4
        for n in range(7):
            self.assertEqual(q[n], F(4 ** n, math.factorial(n)))

    def test_q_rs(self):
        x, y = F(1, 2), F(1, 3)
        q = q_coeffs(finite_vars([x]), 6)
        self.assertEqual(q_rs(2, 2, q), 0)
        self.assertEqual(q_rs(2, 1, q), 0)
        q2 = q_coeffs(finite_vars([x, y]), 6)
        self.assertEqual(q_rs(2, 1, q2), 4 * x * y * (x + y))
        self.assertEqual(q_rs(1, 2, q2), -4 * x * y * (x + y))
        self.assertEqual(q_rs(3, 0, q2), q2[3])
        with self.assertRaises(PreconditionError):
            q_rs(5, 3, q2)


class TestPfaffian(unittest.TestCase):

    def test_two_by_two(self):
        self.assertEqual(pfaffian(SkewMatrix.from_dense([[0, 5], [-5, 0]])), 5)

    def test_four_by_four(self):
        a, b, c, d, e, f = (F(v) for v in (2, 3, 5, 7, 11, 13))
        m = SkewMatrix(4, ((a, b, c), (d, e), (f,), ()))
        self.assertEqual(pfaffian(m), a * f - b * e + c * d)

    def test_empty_and_odd(self):
        self.assertEqual(pfaffian(SkewMatrix(0, ())), 1)
        with self.assertRaises(PreconditionError):
            pfaffian(SkewMatrix(3, ((1, 2), (3,), ())))

    def test_square_is_determinant(self):
        rng = random.Random(17)
        for dim in (2, 4, 6, 8, 10):
            for _ in range(3):
                m = random_skew(rng, dim)
                self.assertEqual(pfaffian(m) ** 2, exact_det(m))

    def test_fraction_free_matches_expansion(self):
        rng = random.Random(23)
        for _ in range(3):
            m = random_skew(rng, 10)
            # first-row expansion into dim-8 minors uses the other engine
            by_rows = sum(
                (-1) ** (j - 1) * m.entry(0, j) * pfaffian(m.minor((0, j)))
                for j in range(1, 10)
            )
            self.assertEqual(pfaffian(m), by_rows)
            self.assertEqual(pfaffian(m) ** 2, exact_det(m))

    def test_fraction_free_zero_pivots(self):
        # a(0,1) = 0 forces a swap; the block matrix has a known pfaffian
        blocks = [[0] * 10 for _ in range(10)]
        for k in range(5):
            i, j = 2 * k, 2 * k + 1
            blocks[i][(j + 2) % 10] = k + 1
            blocks[(j + 2) % 10][i] = -(k + 1)
        m = SkewMatrix.from_dense(blocks)
        self.assertEqual(pfaffian(m) ** 2, exact_det(m))

    def test_approx_matches_exact(self):
        rng = random.Random(29)
        for dim in (2, 4, 6, 10, 12):
            m = random_skew(rng, dim)
            approx = SkewMatrix.from_function(
                dim, lambda i, j: float(m.entry(i, j)), "approx",
            )
            exact = float(pfaffian(m))
            self.assertAlmostEqual(pfaffian(approx), exact, delta=1e-9 * max(1.0, abs(exact)))
            self.assertAlmostEqual(
                pfaffian(approx) ** 2, float(np.linalg.det(approx.to_numpy())),
                delta=1e-8 * max(1.0, exact ** 2),
            )

    def test_sensitivity(self):
        m = SkewMatrix.from_function(4, lambda i, j: float(i + j + 1), "approx")
        errors = [[1e-6] * 4 for _ in range(4)]
        value, bound = pfaffian_with_sensitivity(m, errors)
        self.assertAlmostEqual(value, 2 * 6 - 3 * 5 + 4 * 4)
        # derivative magnitudes are the complementary entries 6, 5, 4, 4, 3, 2
        self.assertAlmostEqual(bound, 1e-6 * 24, places=12)


class TestSchurQ(unittest.TestCase):

    def test_single_row(self):
        spec = finite_vars([F(1, 2), F(1, 3)])
        q = q_coeffs(spec, 5)
        self.assertEqual(schur_q(SP((5,)), spec), q[5])
        self.assertEqual(schur_p(SP((5,)), spec), q[5] / 2)
        self.assertEqual(schur_p(SP(()), spec), 1)

    def test_two_variables(self):
        x, y = F(1, 2), F(1, 3)
        spec = finite_vars([x, y])
        self.assertEqual(schur_q(SP((2, 1)), spec), 4 * x * y * (x + y))
        self.assertEqual(schur_p(SP((2, 1)), spec), x * y * (x + y))
        self.assertEqual(schur_q_genfun_oracle(SP((2, 1)), [x, y]), F(5, 9))

    def test_exponential_closed_form(self):
        for xi in (F(1, 2), 2, 8):
            spec = exponential(xi)
            for n in range(1, 11):
                for lam in enumerate_strict(n):
                    self.assertEqual(schur_q(lam, spec), q_exponential_closed_form(lam, xi))
        # (3,1) at xi = 2: (2 xi)^2 g / 4! = 16 * 2 / 24
        self.assertEqual(schur_q(SP((3, 1)), exponential(2)), F(16 * 2, 24))
        self.assertEqual(g_formula(SP((3, 1))), 2)

    def test_pfaffian_matches_oracle(self):
        values = [F(1, 2), F(1, 3), F(1, 5)]
        for xs in (values[:2], values):
            spec = finite_vars(xs)
            for n in range(0, 11):
                for lam in enumerate_strict(n):
                    if lam.length > len(xs):
                        # Q vanishes with more parts than variables
                        self.assertEqual(schur_q(lam, spec), 0, (lam, xs))
                        continue
                    self.assertEqual(
                        schur_q(lam, spec), schur_q_genfun_oracle(lam, xs), (lam, xs)
                    )

    def test_oracle_single_variable(self):
        x = F(3, 7)
        self.assertEqual(schur_q_genfun_oracle(SP((4,)), [x]), 2 * x ** 4)

    def test_oracle_three_parts(self):
        xs = [F(1, 2), F(1, 3), F(1, 5)]
        lam = SP((3, 2, 1))
        self.assertEqual(schur_q_genfun_oracle(lam, xs), schur_q(lam, finite_vars(xs)))

    def test_oracle_limits(self):
        with self.assertRaises(PreconditionError):
            schur_q_genfun_oracle(SP((2, 1)), [F(1, 2)])
        with self.assertRaises(InfeasibleScaleError):
            schur_q_genfun_oracle(SP((1,)), [F(1, 9)] * 5)

    def test_vanishing_beyond_variable_count(self):
        spec = finite_vars([F(1, 2), F(1, 3)])
        for lam in enumerate_strict(9):
            if lam.length > 2:
                self.assertEqual(schur_q(lam, spec), 0)

    def test_graded_cauchy(self):
        xs, ys = [F(1, 2), F(1, 3)], [F(1, 5), F(2, 7)]
        for d in range(0, 11):
            lhs, rhs = cauchy_graded(xs, ys, d)
            self.assertEqual(lhs, rhs, d)


class TestZSS(unittest.TestCase):

    def test_product_form(self):
        self.assertEqual(z_ss(finite_vars([F(1, 2)]), finite_vars([F(1, 3)])), F(7, 5))

    def test_trivial_y(self):
        self.assertEqual(z_ss(finite_vars([F(1, 2)]), finite_vars([])), 1)

    def test_exponential_pair(self):
        self.assertAlmostEqual(z_ss(exponential(3), exponential(3)), math.exp(3), places=9)

    def test_power_sum_route_matches_product(self):
        xs, t = [0.3, 0.1], 0.2
        ys = [t ** j for j in range(1, 60)]
        product = math.prod((1 + x * y) / (1 - x * y) for x in xs for y in ys)
        self.assertAlmostEqual(z_ss(finite_vars(xs), principal(t)), product, places=12)

    def test_alpha_is_repeated_variable(self):
        a = F(1, 5)
        self.assertEqual(
            z_ss(finite_vars([F(1, 2)]), alpha(3, a)),
            z_ss(finite_vars([F(1, 2)]), finite_vars([a, a, a])),
        )

    def test_divergent(self):
        with self.assertRaises(DivergentSpecializationError):
            z_ss(finite_vars([F(2)]), finite_vars([F(1, 2)]))


if __name__ == "__main__":
    unittest.main()
