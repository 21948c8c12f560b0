# Copyright (C) 2021 ISIS Rutherford Appleton Laboratory UKRI
# SPDX - License - Identifier: GPL-3.0-or-later

import unittest

import numpy as np
import pytest

from interlacepoly.core.interlace import qn_closed
from interlacepoly.core.isotropic import (NONZERO, KleinElement, KVector, allowed_values, choice_to_vector,
                                          graphic_system, graphic_system_swapped, tutte_martin_canonical,
                                          tutte_martin_restricted)
from interlacepoly.core.utility.data_containers import ISOTROPIC_MAX_N
from interlacepoly.test_helpers.unit_test_helper import (K1, K2, K3, P3, all_graphs, edgeless, graph, looped_vertex,
                                                         random_graph, run_slow_tests, uni)

X, Y, Z = KleinElement.X, KleinElement.Y, KleinElement.Z


class AllowedValuesTest(unittest.TestCase):
    def test_two_values_smaller_first(self):
        self.assertEqual(allowed_values(KVector.from_word("zxy")), [(X, Y), (Y, Z), (X, Z)])

    def test_zero_rejected(self):
        with self.assertRaises(ValueError):
            allowed_values(KVector.from_word("z0"))

    def test_counter_selects_second_value(self):
        choices = allowed_values(KVector.from_word("zzz"))
        self.assertEqual(choice_to_vector(choices, 0b000).to_word(), "xxx")
        self.assertEqual(choice_to_vector(choices, 0b101).to_word(), "yxy")


class TutteMartinTest(unittest.TestCase):
    def test_single_vertex(self):
        self.assertEqual(tutte_martin_canonical(K1), uni(0, 1))

    def test_empty_system(self):
        self.assertEqual(tutte_martin_canonical(edgeless(0)), uni(1))

    def test_single_edge(self):
        self.assertEqual(tutte_martin_canonical(K2), uni(0, 2))

    def test_triangle(self):
        self.assertEqual(tutte_martin_canonical(K3), uni(0, 4))

    def test_path(self):
        self.assertEqual(tutte_martin_canonical(P3), uni(0, 2, 1))

    def test_restricted_zero_coordinate_rejected(self):
        s = graphic_system(K2, KVector.complete(2, X), KVector.complete(2, Y))
        with self.assertRaises(ValueError):
            tutte_martin_restricted(s, KVector.from_word("z0"))

    def test_restricted_length_mismatch(self):
        s = graphic_system(K2, KVector.complete(2, X), KVector.complete(2, Y))
        with self.assertRaises(ValueError):
            tutte_martin_restricted(s, KVector.complete(3, Z))

    def test_loops_rejected(self):
        with self.assertRaises(ValueError):
            tutte_martin_canonical(looped_vertex())

    def test_size_cap(self):
        with self.assertRaises(ValueError):
            tutte_martin_canonical(edgeless(ISOTROPIC_MAX_N + 1))

    def test_value_at_one_counts_complementary_vectors(self):
        # m(S, C; 1) counts the F with L n F^ = 0
        g = graph(4, (0, 1), (1, 2), (2, 3), (3, 0), (0, 2))
        self.assertEqual(tutte_martin_canonical(g).evaluate(1), qn_closed(g).evaluate(1))


@pytest.mark.parametrize('n', range(6))
def test_canonical_matches_closed_form(n):
    for g in all_graphs(n):
        assert tutte_martin_canonical(g) == qn_closed(g)


@pytest.mark.skipif(not run_slow_tests(), reason="exhaustive n=6 check is slow")
def test_canonical_matches_closed_form_six_vertices():
    for g in all_graphs(6):
        assert tutte_martin_canonical(g) == qn_closed(g)


@pytest.mark.parametrize('seed', range(25))
def test_any_graphic_presentation_gives_vertex_nullity(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, 8))
    g = random_graph(n, seed)
    a = KVector.from_elements(NONZERO[i] for i in rng.integers(0, 3, n))
    b = KVector.from_elements(NONZERO[(NONZERO.index(e) + int(rng.integers(1, 3))) % 3] for e in a)
    expected = qn_closed(g)
    assert tutte_martin_restricted(graphic_system(g, a, b), a + b) == expected
    assert tutte_martin_restricted(graphic_system_swapped(g, a, b), a + b) == expected


if __name__ == '__main__':
    unittest.main()
