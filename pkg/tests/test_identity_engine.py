"""
항등식 엔진 테스트
예제 값, 퇴화 경우, 가변 계수 v 곱 범위, a 복원, 퍼즈 건전성
"""

import random
import unittest

from src.errors import IndexConstraint, InexactDivision, SingularInitialPair
from src.exact_algebra import RingValue
from src.identity_engine import IdentityEngine, IdentityName, VProductConvention
from src.recurrence_core import RecurrenceSpec, VarCoeffSpec, generate


def I(value):
    return RingValue.integer(value)


def ints(*values):
    return tuple(RingValue.integer(v) for v in values)


def P(*coeffs):
    return RingValue.polynomial(coeffs)


class TestDocagne(unittest.TestCase):
    """일반화된 d'Ocagne 항등식 테스트"""

    def setUp(self):
        self.engine = IdentityEngine()

    def test_hand_example(self):
        report = self.engine.check_docagne_general(I(2), I(3), ints(1, 4), ints(2, 1), 1, 2)
        self.assertTrue(report.holds)
        self.assertEqual(report.lhs, I(42))
        self.assertEqual(report.rhs, I(42))
        self.assertEqual(report.identity, IdentityName.DOCAGNE)
        self.assertEqual(report.params, {'k': 1, 'm': 2})
        self.assertEqual(report.witnesses['b_3'], I(34))

    def test_fibonacci_corollary(self):
        report = self.engine.check_docagne_general(I(1), I(1), ints(1, 1), ints(0, 1), 2, 3)
        self.assertTrue(report.holds)
        self.assertEqual(report.lhs, I(2))

    def test_m_zero_both_sides_zero(self):
        report = self.engine.check_docagne_general(I(5), I(-7), ints(3, -2), ints(4, 9), 6, 0)
        self.assertTrue(report.holds)
        self.assertTrue(report.lhs.is_zero())
        self.assertTrue(report.rhs.is_zero())

    def test_polynomial(self):
        report = self.engine.check_docagne_general(P(0, 2), P(-1), (P(1), P(0, 1)), (P(), P(1)),
                                                   4, 3)
        self.assertTrue(report.holds)

    def test_negative_index(self):
        with self.assertRaises(IndexConstraint):
            self.engine.check_docagne_general(I(1), I(1), ints(1, 1), ints(0, 1), -1, 2)

    def test_fuzz_soundness(self):
        """10,000 개 시드 인스턴스 모두 성립"""
        rng = random.Random(2024)
        for _ in range(10000):
            x = rng.randint(-9, 9)
            y = rng.choice([v for v in range(-9, 10) if v])
            b = ints(rng.randint(-9, 9), rng.randint(-9, 9))
            c = ints(rng.randint(-9, 9), rng.randint(-9, 9))
            report = self.engine.check_docagne_general(I(x), I(y), b, c,
                                                       rng.randint(0, 25), rng.randint(0, 25))
            self.assertTrue(report.holds, report)


class TestVariableCoefficient(unittest.TestCase):
    """가변 계수 항등식 테스트"""

    def setUp(self):
        self.engine = IdentityEngine()
        self.spec = VarCoeffSpec(ints(1, 2, 3, 4), ints(5, 1, 2), ints(1, 0))

    def test_hand_examples(self):
        report = self.engine.check_variable_coefficient(self.spec, ints(1, 0), ints(0, 1), 1, 1)
        self.assertTrue(report.holds)
        self.assertEqual(report.lhs, I(-15))

        report = self.engine.check_variable_coefficient(self.spec, ints(1, 0), ints(0, 1), 2, 2)
        self.assertTrue(report.holds)
        self.assertEqual(report.lhs, I(20))

    def test_one_based_product_counterexample(self):
        """v_1⋯v_k 범위는 반례 (-15 ≠ -3)"""
        report = self.engine.check_variable_coefficient(
            self.spec, ints(1, 0), ints(0, 1), 1, 1, VProductConvention.ONE_BASED)
        self.assertFalse(report.holds)
        self.assertEqual(report.lhs, I(-15))
        self.assertEqual(report.rhs, I(-3))

    def test_index_bounds(self):
        with self.assertRaises(IndexConstraint):
            self.engine.check_variable_coefficient(self.spec, ints(1, 0), ints(0, 1), 4, 1)

    def test_random_windows(self):
        """1,000 개 무작위 윈도우: 0-기반은 모두 성립, 1-기반은 반례 존재"""
        rng = random.Random(11)
        values = [v for v in range(-5, 6) if v]
        one_based_failures = 0
        for _ in range(1000):
            n = rng.randint(0, 13)
            k = rng.randint(0, n + 2)
            u = ints(*(rng.randint(-5, 5) for _ in range(n + 3)))
            v = ints(*(rng.choice(values) for _ in range(n + 3)))
            b = ints(rng.randint(-9, 9), rng.randint(-9, 9))
            c = ints(rng.randint(-9, 9), rng.randint(-9, 9))
            spec = VarCoeffSpec(u, v, b)
            self.assertTrue(self.engine.check_variable_coefficient(spec, b, c, k, n).holds)
            literal = self.engine.check_variable_coefficient(
                spec, b, c, k, n, VProductConvention.ONE_BASED)
            one_based_failures += not literal.holds
        self.assertGreater(one_based_failures, 0)


class TestSpecializations(unittest.TestCase):
    """Cassini, 지수 축소, 축소 d'Ocagne, 4-매개변수, Vajda, Catalan"""

    def setUp(self):
        self.engine = IdentityEngine()

    def test_cassini(self):
        report = self.engine.check_cassini(I(1), I(1), ints(2, 1), ints(0, 1), 3)
        self.assertTrue(report.holds)
        self.assertEqual(report.lhs, I(-2))

        report = self.engine.check_cassini(I(1), I(2), ints(1, 1), ints(0, 1), 2)
        self.assertTrue(report.holds)
        self.assertEqual(report.rhs, I(4))

    def test_chebyshev_t_cassini(self):
        """T_2² − T_1·T_3 = 1 − z²"""
        report = self.engine.check_cassini(P(0, 2), P(-1), (P(0, 1), P(-1, 0, 2)),
                                           (P(1), P(0, 1)), 1)
        self.assertTrue(report.holds)
        self.assertEqual(report.lhs, P(1, 0, -1))

    def test_index_reduction(self):
        report = self.engine.check_index_reduction(I(1), I(1), ints(1, 1), ints(0, 1), 3, 2, 2)
        self.assertTrue(report.holds)
        self.assertEqual(report.lhs, I(-1))

        same = self.engine.check_index_reduction(I(4), I(-3), ints(2, 7), ints(1, 5), 5, 3, 0)
        self.assertEqual(same.lhs, same.rhs)

        with self.assertRaises(IndexConstraint):
            self.engine.check_index_reduction(I(1), I(1), ints(1, 1), ints(0, 1), 2, 2, 3)

    def test_reduced_docagne(self):
        report = self.engine.check_reduced_docagne(I(1), I(1), ints(1, 1), ints(2, 3), 4)
        self.assertTrue(report.holds)
        self.assertEqual(report.lhs, I(3))

        zero = self.engine.check_reduced_docagne(I(3), I(5), ints(1, 2), ints(7, 4), 0)
        self.assertTrue(zero.lhs.is_zero())

        one = self.engine.check_reduced_docagne(I(3), I(5), ints(1, 2), ints(7, 4), 1)
        self.assertEqual(one.lhs, I(1 * 4 - 2 * 7))

    def test_four_param(self):
        report = self.engine.check_four_param(I(1), I(1), ints(0, 1), 1, 2, 3, 2)
        self.assertTrue(report.holds)
        self.assertEqual(report.lhs, I(-1))

        squares = self.engine.check_four_param(I(1), I(1), ints(0, 1), 1, 2, 2, 1)
        self.assertTrue(squares.holds)
        self.assertEqual(squares.rhs, I(1))

        with self.assertRaises(IndexConstraint):
            self.engine.check_four_param(I(1), I(1), ints(0, 1), 3, 2, 1, 0)
        with self.assertRaises(IndexConstraint):
            self.engine.check_four_param(I(1), I(1), ints(0, 1), 1, 2, 1, 2)

    def test_vajda(self):
        lucas = self.engine.check_vajda(I(1), I(1), ints(2, 1), 1, 2, 1)
        self.assertTrue(lucas.holds)
        self.assertEqual(lucas.lhs, I(-1))

        mersenne = self.engine.check_vajda(I(3), I(-2), ints(0, 1), 1, 2, 1)
        self.assertTrue(mersenne.holds)
        self.assertEqual(mersenne.rhs, I(6))

        integers = self.engine.check_vajda(I(2), I(-1), ints(0, 1), 3, 2, 5)
        self.assertTrue(integers.holds)
        self.assertEqual(integers.rhs, I(10))

    def test_catalan(self):
        pell = self.engine.check_catalan(I(2), I(1), 4, 2)
        self.assertTrue(pell.holds)
        self.assertEqual(pell.lhs, I(4))

        jacobsthal = self.engine.check_catalan(I(1), I(2), 4, 2)
        self.assertTrue(jacobsthal.holds)
        self.assertEqual(jacobsthal.rhs, I(4))

        zero = self.engine.check_catalan(I(3), I(7), 6, 0)
        self.assertTrue(zero.lhs.is_zero() and zero.rhs.is_zero())

        with self.assertRaises(IndexConstraint):
            self.engine.check_catalan(I(1), I(1), 2, 3)


class TestRecoverA(unittest.TestCase):
    """두 윈도우로부터 a_m 복원 테스트"""

    def setUp(self):
        self.engine = IdentityEngine()
        self.b = generate(RecurrenceSpec(I(2), I(3), ints(1, 4)), 5).values
        self.c = generate(RecurrenceSpec(I(2), I(3), ints(2, 1)), 5).values

    def test_recover(self):
        self.assertEqual(self.engine.recover_a(I(2), I(3), self.b, self.c, 1, 2), I(2))
        self.assertEqual(self.engine.recover_a(I(2), I(3), self.b, self.c, 0, 1), I(1))

    def test_recover_report(self):
        report = self.engine.check_recover_a(I(2), I(3), self.b, self.c, 2, 3)
        self.assertTrue(report.holds)
        self.assertEqual(report.identity, IdentityName.RECOVER_A)
        self.assertEqual(report.lhs, I(7))

    def test_singular_pair(self):
        with self.assertRaises(SingularInitialPair):
            self.engine.recover_a(I(2), I(3), self.b, self.b, 1, 2)

    def test_inconsistent_window(self):
        broken = self.b[:3] + (self.b[3] + I(1),) + self.b[4:]
        with self.assertRaises(InexactDivision):
            self.engine.recover_a(I(2), I(3), broken, self.c, 1, 2)

    def test_polynomial_recover(self):
        x, y = P(0, 2), P(-1)
        b = generate(RecurrenceSpec(x, y, (P(1), P(0, 1))), 6).values
        c = generate(RecurrenceSpec(x, y, (P(), P(1))), 6).values
        expected = generate(RecurrenceSpec.canonical(x, y), 4).term(4)
        self.assertEqual(self.engine.recover_a(x, y, b, c, 2, 4), expected)

    def test_short_window(self):
        with self.assertRaises(IndexConstraint):
            self.engine.recover_a(I(2), I(3), self.b[:3], self.c[:3], 1, 2)


class TestWitnessOverrides(unittest.TestCase):
    """증거 변형 재계산"""

    def test_perturbation_breaks_identity(self):
        engine = IdentityEngine()
        report = engine.check_docagne_general(I(2), I(3), ints(1, 4), ints(2, 1), 1, 2)
        mutated = report.with_witnesses({'b_3': I(35)})
        self.assertFalse(mutated.holds)
        self.assertTrue(report.holds)
        with self.assertRaises(KeyError):
            report.with_witnesses({'z_9': I(1)})

class TestSpecializationChain(unittest.TestCase):
    """특수화 관계: 일반 항등식에 매개변수를 대입하면 특수 항등식과 같은 lhs/rhs"""

    def setUp(self):
        self.engine = IdentityEngine()
        self.rng = random.Random(20240518)

    def _coefficients(self):
        x = I(self.rng.randint(-9, 9))
        y = I(self.rng.choice([v for v in range(-9, 10) if v != 0]))
        return x, y

    def _pair(self):
        return ints(self.rng.randint(-9, 9), self.rng.randint(-9, 9))

    def assertSameSides(self, general, special, context):
        self.assertEqual(general.lhs, special.lhs, context)
        self.assertEqual(general.rhs, special.rhs, context)
        self.assertEqual(general.holds, special.holds, context)
        self.assertTrue(special.holds, context)

    def test_cassini_is_docagne_with_unit_gap(self):
        for _ in range(200):
            x, y = self._coefficients()
            b_init, c_init = self._pair(), self._pair()
            k = self.rng.randint(0, 15)
            self.assertSameSides(self.engine.check_docagne_general(x, y, b_init, c_init, k, 1),
                                 self.engine.check_cassini(x, y, b_init, c_init, k),
                                 (x, y, b_init, c_init, k))

    def test_catalan_is_vajda_on_canonical_sequence(self):
        for _ in range(200):
            x, y = self._coefficients()
            n = self.rng.randint(0, 15)
            r = self.rng.randint(0, n)
            self.assertSameSides(self.engine.check_vajda(x, y, ints(0, 1), n - r, r, r),
                                 self.engine.check_catalan(x, y, n, r),
                                 (x, y, n, r))

    def test_four_param_with_equal_shifts_is_docagne(self):
        """p = q 이면 c = a 인 d'Ocagne (k' = k+p, m' = m−k)"""
        for _ in range(200):
            x, y = self._coefficients()
            b_init = self._pair()
            k = self.rng.randint(0, 8)
            m = self.rng.randint(k, k + 8)
            p = self.rng.randint(0, 8)
            self.assertSameSides(
                self.engine.check_four_param(x, y, b_init, k, m, p, p),
                self.engine.check_docagne_general(x, y, b_init, ints(0, 1), k + p, m - k),
                (x, y, b_init, k, m, p))

    def test_constant_window_var_coeff_is_docagne(self):
        """상수 계수 윈도우의 가변 계수 항등식 = d'Ocagne (m = n+2−k)"""
        for _ in range(200):
            x, y = self._coefficients()
            b_init, c_init = self._pair(), self._pair()
            n = self.rng.randint(0, 12)
            k = self.rng.randint(0, n + 2)
            spec = VarCoeffSpec.constant(x, y, n + 3)
            self.assertSameSides(
                self.engine.check_variable_coefficient(spec, b_init, c_init, k, n),
                self.engine.check_docagne_general(x, y, b_init, c_init, k, n + 2 - k),
                (x, y, b_init, c_init, k, n))


if __name__ == '__main__':
    unittest.main()
