# Copyright (C) 2021 ISIS Rutherford Appleton Laboratory UKRI
# SPDX - License - Identifier: GPL-3.0-or-later

import json
import unittest

import numpy as np
import pytest
from parameterized import parameterized

from interlacepoly.core.poly import (BiPoly, UniPoly, add, add_shifted_power, divide_by_var, eval_at, mul, scale,
                                     substitute)

X = UniPoly('x', (0, 1))
ONE = UniPoly.constant(1)


def uni(*coeffs, var='x'):
    return UniPoly(var, coeffs)


def random_uni(rng, var='x'):
    return UniPoly(var, tuple(int(c) for c in rng.integers(-5, 6, size=int(rng.integers(0, 6)))))


class UniPolyTest(unittest.TestCase):
    def test_trailing_zeros_trimmed(self):
        p = uni(1, 2, 0, 0)
        self.assertEqual(p.coeffs, (1, 2))
        self.assertEqual(p.degree, 1)
        self.assertEqual(uni(0, 0).degree, -1)
        self.assertTrue(uni(0).is_zero())

    def test_ring_examples(self):
        self.assertEqual(add(X, X), uni(0, 2))
        self.assertEqual(mul(uni(1, 1), uni(-1, 1)), uni(-1, 0, 1))
        self.assertTrue(scale(uni(0, 2, 1), 0).is_zero())

    def test_variable_mismatch(self):
        with self.assertRaises(ValueError):
            add(X, uni(0, 1, var='y'))
        with self.assertRaises(ValueError):
            mul(X, uni(0, 1, var='y'))

    @parameterized.expand([
        ("zero_power", uni(), 0, -1, uni(1)),
        ("square", uni(), 2, -1, uni(1, -2, 1)),
        ("onto_one", uni(1), 1, -1, uni(0, 1)),
    ])
    def test_add_shifted_power(self, _, p, k, shift, expected):
        self.assertEqual(add_shifted_power(p, k, shift), expected)

    def test_add_shifted_power_multiplicity(self):
        self.assertEqual(add_shifted_power(uni(), 1, -1, multiplicity=3), uni(-3, 3))

    def test_add_shifted_power_negative_exponent(self):
        with self.assertRaises(ValueError):
            add_shifted_power(uni(), -1, 0)

    @parameterized.expand([
        ("up", uni(0, 0, 1), 1, uni(1, 2, 1)),
        ("down", uni(1, 2, 1), -1, uni(0, 0, 1)),
        ("linear", uni(0, 2), 1, uni(2, 2)),
    ])
    def test_substitute(self, _, p, shift, expected):
        self.assertEqual(substitute(p, shift), expected)

    def test_divide_by_var(self):
        self.assertEqual(divide_by_var(uni(0, 1, 1)), uni(1, 1))
        self.assertEqual(divide_by_var(X), ONE)
        self.assertEqual(divide_by_var(uni(0, 2, 2)), uni(2, 2))

    def test_divide_by_var_nonzero_constant(self):
        with self.assertRaisesRegex(ValueError, "constant term is 1"):
            divide_by_var(uni(1, 1))

    def test_text_form(self):
        self.assertEqual(str(uni(0, 2, 1)), "x^2 + 2*x")
        self.assertEqual(str(uni(0, 1, 1)), "x^2 + x")
        self.assertEqual(str(uni(1, -2, 1)), "x^2 - 2*x + 1")
        self.assertEqual(str(uni(-1, 0, -3)), "-3*x^2 - 1")
        self.assertEqual(str(uni()), "0")
        self.assertEqual(str(uni(7)), "7")

    def test_json(self):
        p = uni(0, 2, 1)
        self.assertEqual(json.dumps(p.to_json()), '{"var": "x", "coeffs": [0, 2, 1]}')
        self.assertEqual(UniPoly.from_json(p.to_json()), p)

    def test_evaluate_and_power(self):
        p = uni(1, 1)
        self.assertEqual(p.power(3), uni(1, 3, 3, 1))
        self.assertEqual(p.power(0), ONE)
        self.assertEqual(p.evaluate(2), 3)

    def test_large_coefficients_stay_exact(self):
        p = uni()
        for _ in range(4):
            p = add_shifted_power(p, 60, 3)
        self.assertEqual(p.coefficient(0), 4 * 3**60)

    def test_exponent_histogram_matches_repeated_adds(self):
        histogram = np.array([1, 3, 3, 1], dtype=np.int64)
        expected = uni()
        for k, count in enumerate(histogram):
            expected = add_shifted_power(expected, k, -1, int(count))
        self.assertEqual(UniPoly.from_exponent_histogram(histogram, -1), expected)
        self.assertEqual(expected, uni(0, 0, 0, 1))


class BiPolyTest(unittest.TestCase):
    def test_zero_terms_dropped(self):
        p = BiPoly(('x', 'y'), {(1, 0): 0, (0, 1): 2})
        self.assertEqual(p.terms, {(0, 1): 2})

    def test_eval_at(self):
        x_minus_1 = BiPoly(('x', 'y'), {(1, 0): 1, (0, 0): -1})
        y_minus_1 = BiPoly(('x', 'y'), {(0, 1): 1, (0, 0): -1})
        self.assertEqual(eval_at(x_minus_1 * y_minus_1, 2), uni(-1, 1, var='y'))
        self.assertEqual(eval_at(BiPoly(('x', 'y'), {(0, 3): 1}), 2), uni(0, 0, 0, 1, var='y'))

    def test_eval_at_two_variable_k2(self):
        # 2y + (x-1)^2 - 1
        q = BiPoly(('x', 'y'), {(0, 1): 2, (2, 0): 1, (1, 0): -2})
        self.assertEqual(eval_at(q, 2), uni(0, 2, var='y'))

    def test_text_form(self):
        q = BiPoly(('x', 'y'), {(0, 1): 2, (2, 0): 1, (1, 0): -2})
        self.assertEqual(str(q), "x^2 - 2*x + 2*y")
        self.assertEqual(str(BiPoly(('x', 'y'), {(1, 1): -1, (0, 0): 1})), "-x*y + 1")

    def test_json_sorted_terms(self):
        q = BiPoly(('x', 'y'), {(2, 0): 1, (0, 1): 2, (1, 0): -2})
        self.assertEqual(q.to_json(), {"vars": ["x", "y"], "terms": [[0, 1, 2], [1, 0, -2], [2, 0, 1]]})
        self.assertEqual(BiPoly.from_json(q.to_json()), q)

    def test_from_exponent_histogram(self):
        histogram = np.zeros((2, 2), dtype=np.int64)
        histogram[0, 0] = 1
        histogram[1, 1] = 1
        # 1 + (x-1)(y-1)
        expected = BiPoly(('x', 'y'), {(1, 1): 1, (1, 0): -1, (0, 1): -1, (0, 0): 2})
        self.assertEqual(BiPoly.from_exponent_histogram(histogram, -1, -1), expected)

    def test_from_uni(self):
        p = BiPoly.from_uni(uni(0, 0, 1, var='y'), position=1)
        self.assertEqual(p.terms, {(0, 2): 1})
        with self.assertRaises(ValueError):
            BiPoly.from_uni(uni(0, 1, var='y'), position=0)

    def test_hashable(self):
        a = BiPoly(('x', 'y'), {(1, 0): 1})
        b = BiPoly(('x', 'y'), {(1, 0): 1})
        self.assertEqual(len({a, b}), 1)


@pytest.mark.parametrize('seed', range(15))
def test_substitute_round_trip(seed):
    p = random_uni(np.random.default_rng(seed))
    assert substitute(substitute(p, 1), -1) == p


@pytest.mark.parametrize('k', range(12))
def test_shifted_power_at_two_is_one(k):
    assert add_shifted_power(uni(), k, -1).evaluate(2) == 1


@pytest.mark.parametrize('seed', range(15))
def test_ring_axioms(seed):
    rng = np.random.default_rng(1000 + seed)
    a, b, c = random_uni(rng), random_uni(rng), random_uni(rng)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a - a == uni()


@pytest.mark.parametrize('seed', range(10))
def test_bivariate_distributive(seed):
    rng = np.random.default_rng(2000 + seed)

    def random_bi():
        return BiPoly(('x', 'y'), {(int(i), int(j)): int(c)
                                   for i, j, c in rng.integers(-3, 4, size=(4, 3)) if i >= 0 and j >= 0})

    a, b, c = random_bi(), random_bi(), random_bi()
    assert a * (b + c) == a * b + a * c
    assert (a + b).evaluate(2, 3) == a.evaluate(2, 3) + b.evaluate(2, 3)


if __name__ == '__main__':
    unittest.main()
