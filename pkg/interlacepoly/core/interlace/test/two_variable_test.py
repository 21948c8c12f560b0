# Copyright (C) 2021 ISIS Rutherford Appleton Laboratory UKRI
# SPDX - License - Identifier: GPL-3.0-or-later

import unittest

import numpy as np
import pytest

from interlacepoly.core.graph import SimpleGraph
from interlacepoly.core.interlace import q2_closed, q2_reduction
from interlacepoly.core.poly import BiPoly
from interlacepoly.core.utility.data_containers import CLOSED_FORM_MAX_N
from interlacepoly.test_helpers.unit_test_helper import K2, K3, all_looped_graphs, edgeless, looped_vertex, \
    random_graph, uni

K2_Q = BiPoly(('x', 'y'), {(0, 1): 2, (2, 0): 1, (1, 0): -2})


class TwoVariableTest(unittest.TestCase):
    def test_edgeless(self):
        for n in range(5):
            expected = BiPoly(('x', 'y'), {(0, n): 1})
            self.assertEqual(q2_closed(edgeless(n)), expected)
            self.assertEqual(q2_reduction(edgeless(n)), expected)

    def test_looped_vertex(self):
        expected = BiPoly(('x', 'y'), {(1, 0): 1})
        self.assertEqual(q2_closed(looped_vertex()), expected)
        self.assertEqual(q2_reduction(looped_vertex()), expected)

    def test_single_edge(self):
        self.assertEqual(q2_closed(K2), K2_Q)
        self.assertEqual(q2_reduction(K2), K2_Q)
        self.assertEqual(q2_closed(K2).eval_at(2), uni(0, 2, var='y'))

    def test_triangle_at_two(self):
        self.assertEqual(q2_closed(K3).eval_at(2), uni(0, 4, var='y'))

    def test_loop_with_neighbour(self):
        g = SimpleGraph.from_edges(2, [(0, 0), (0, 1)])
        self.assertEqual(q2_reduction(g), q2_closed(g))

    def test_size_cap(self):
        with self.assertRaises(ValueError):
            q2_closed(edgeless(CLOSED_FORM_MAX_N + 1))


@pytest.mark.parametrize('n', range(5))
def test_reduction_matches_closed_form_with_loops(n):
    for g in all_looped_graphs(n):
        assert q2_reduction(g) == q2_closed(g)


@pytest.mark.parametrize('seed', range(200))
def test_reduction_matches_closed_form_random(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(0, 8))
    g = random_graph(n, seed, loop_probability=0.3)
    assert q2_reduction(g) == q2_closed(g)


@pytest.mark.parametrize('seed', range(20))
def test_value_at_two_two(seed):
    g = random_graph(6, seed, loop_probability=0.5)
    assert q2_closed(g).evaluate(2, 2) == 2**6


if __name__ == '__main__':
    unittest.main()
