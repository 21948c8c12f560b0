# Copyright (C) 2021 ISIS Rutherford Appleton Laboratory UKRI
# SPDX - License - Identifier: GPL-3.0-or-later

import itertools
import unittest

import pytest

from interlacepoly.core.gf2 import GF2Matrix, rank
from interlacepoly.core.graph import (EMPTY_GRAPH_KEY, SimpleGraph, adjacency_matrix, canonical_key, delete_vertex,
                                      induced_subgraph, is_even_subgraph, least_edge, local_complement,
                                      neighborhood_set, pivot, pivot_via_local_complements, swap_labels)
from interlacepoly.core.graph.generators import all_graphs, all_looped_graphs, complete, edgeless, random_graph
from interlacepoly.test_helpers.unit_test_helper import K2, K3, P3, P4, graph, looped_vertex


class SimpleGraphTest(unittest.TestCase):
    def test_rejects_asymmetric_rows(self):
        with self.assertRaises(ValueError):
            SimpleGraph(2, [0b10, 0b00])

    def test_rejects_loops_unless_allowed(self):
        with self.assertRaises(ValueError):
            SimpleGraph(1, [1])
        self.assertTrue(SimpleGraph(1, [1], loops_allowed=True).has_loops())

    def test_rejects_oversized(self):
        with self.assertRaises(ValueError):
            SimpleGraph(64)

    def test_edges_sorted(self):
        g = graph(4, (2, 3), (0, 1), (1, 2))
        self.assertEqual(g.edges(), [(0, 1), (1, 2), (2, 3)])
        self.assertEqual(g.degree(1), 2)
        self.assertEqual(g.neighbors(2), [1, 3])

    def test_from_edges_out_of_range(self):
        with self.assertRaises(ValueError):
            graph(2, (0, 2))


class NeighborhoodSetTest(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(neighborhood_set(K2, {0}), 0b10)
        self.assertEqual(neighborhood_set(P3, {0, 2}), 0)
        self.assertEqual(neighborhood_set(K3, set()), 0)
        self.assertEqual(neighborhood_set(P3, 0b010), 0b101)

    def test_out_of_range(self):
        with self.assertRaises(ValueError):
            neighborhood_set(K2, {2})
        with self.assertRaises(ValueError):
            neighborhood_set(K2, 0b100)


class PivotTest(unittest.TestCase):
    def test_triangle_unchanged(self):
        self.assertEqual(pivot(K3, 1, 2), K3)

    def test_path_unchanged(self):
        self.assertEqual(pivot(P3, 0, 1), P3)

    def test_path_on_four(self):
        self.assertEqual(pivot(P4, 1, 2), graph(4, (0, 1), (1, 2), (2, 3), (0, 3)))

    def test_requires_edge(self):
        with self.assertRaises(ValueError):
            pivot(P3, 0, 2)
        with self.assertRaises(ValueError):
            pivot(P3, 1, 1)

    def test_rejects_looped_end(self):
        g = SimpleGraph.from_edges(2, [(0, 1), (0, 0)])
        with self.assertRaises(ValueError):
            pivot(g, 0, 1)

    def test_keeps_loops_elsewhere(self):
        g = SimpleGraph.from_edges(3, [(0, 1), (1, 2), (2, 2)])
        self.assertTrue(pivot(g, 0, 1).is_looped(2))

    def test_triple_local_complement_swaps_ends(self):
        expected = graph(4, (0, 2), (1, 2), (1, 3), (0, 3))
        self.assertEqual(pivot_via_local_complements(P4, 1, 2), expected)
        self.assertEqual(swap_labels(expected, 1, 2), pivot(P4, 1, 2))


class LocalComplementTest(unittest.TestCase):
    def test_triangle_becomes_path(self):
        self.assertEqual(local_complement(K3, 0), graph(3, (0, 1), (0, 2)))

    def test_edgeless_unchanged(self):
        self.assertEqual(local_complement(edgeless(4), 2), edgeless(4))

    def test_path_becomes_triangle(self):
        self.assertEqual(local_complement(P3, 1), K3)

    def test_out_of_range(self):
        with self.assertRaises(ValueError):
            local_complement(K2, 5)

    def test_looped_vertex_toggles_neighbour_loops(self):
        g = SimpleGraph.from_edges(3, [(0, 0), (0, 1), (0, 2)])
        result = local_complement(g, 0)
        self.assertEqual(result, SimpleGraph.from_edges(3, [(0, 0), (0, 1), (0, 2), (1, 1), (2, 2), (1, 2)]))

    def test_unlooped_vertex_keeps_neighbour_loops(self):
        g = SimpleGraph.from_edges(3, [(0, 1), (0, 2), (1, 1)])
        result = local_complement(g, 0)
        self.assertEqual(result.loop_mask(), 0b010)
        self.assertTrue(result.has_edge(1, 2))


class SubgraphTest(unittest.TestCase):
    def test_adjacency_matrix(self):
        self.assertEqual(adjacency_matrix(K3, set()), GF2Matrix(0, 0))
        self.assertEqual(adjacency_matrix(K2), GF2Matrix.from_dense([[0, 1], [1, 0]]))
        m = adjacency_matrix(K3, {0, 1, 2})
        self.assertEqual(m, GF2Matrix.from_dense([[0, 1, 1], [1, 0, 1], [1, 1, 0]]))
        self.assertEqual(rank(m), 2)

    def test_loops_on_diagonal(self):
        self.assertEqual(adjacency_matrix(looped_vertex()), GF2Matrix.from_dense([[1]]))

    def test_induced_subgraph_reindexes(self):
        self.assertEqual(induced_subgraph(P4, {1, 3}), edgeless(2))
        self.assertEqual(induced_subgraph(P4, {0, 1, 3}), graph(3, (0, 1)))

    def test_is_even_subgraph(self):
        self.assertTrue(is_even_subgraph(K2, set()))
        self.assertTrue(is_even_subgraph(K3, {0, 1, 2}))
        self.assertFalse(is_even_subgraph(K2, {0, 1}))

    def test_delete_vertex(self):
        self.assertEqual(delete_vertex(K2, 0), complete(1))
        self.assertEqual(delete_vertex(edgeless(3), 1), edgeless(2))
        self.assertEqual(delete_vertex(K3, 2), K2)
        self.assertEqual(delete_vertex(P3, 0), graph(2, (0, 1)))

    def test_canonical_key(self):
        self.assertEqual(canonical_key(edgeless(0)), EMPTY_GRAPH_KEY)
        self.assertEqual(canonical_key(graph(3, (0, 1))), canonical_key(graph(3, (1, 0))))
        self.assertNotEqual(canonical_key(K2), canonical_key(edgeless(2)))
        self.assertNotEqual(canonical_key(edgeless(1)), canonical_key(edgeless(2)))

    def test_least_edge(self):
        self.assertEqual(least_edge(P4), (0, 1))
        self.assertIsNone(least_edge(edgeless(3)))
        looped = SimpleGraph.from_edges(3, [(0, 0), (0, 1), (1, 2)])
        self.assertEqual(least_edge(looped), (0, 1))
        self.assertEqual(least_edge(looped, loopless_ends=True), (1, 2))


def _graphs_up_to(max_n):
    for n in range(max_n + 1):
        yield from all_graphs(n)


@pytest.mark.parametrize('n', range(7))
def test_pivot_identities_exhaustive(n):
    for g in all_graphs(n):
        for v, w in g.edges():
            p = pivot(g, v, w)
            assert p.has_edge(v, w)
            assert pivot(p, v, w) == g
            assert pivot(g, w, v) == p
            assert swap_labels(pivot_via_local_complements(g, v, w), v, w) == p


@pytest.mark.parametrize('n', range(6))
def test_local_complement_is_involution(n):
    for g in all_graphs(n):
        for v in range(n):
            assert local_complement(local_complement(g, v), v) == g


@pytest.mark.parametrize('n', range(4))
def test_local_complement_is_involution_with_loops(n):
    for g in all_looped_graphs(n):
        for v in range(n):
            assert local_complement(local_complement(g, v), v) == g


@pytest.mark.parametrize('seed', range(20))
def test_neighborhood_set_is_linear(seed):
    g = random_graph(8, seed)
    for p, q in itertools.product((0b1011, 0b0, 0b11110000), (0b10101010, 0b1)):
        assert neighborhood_set(g, p ^ q) == neighborhood_set(g, p) ^ neighborhood_set(g, q)


if __name__ == '__main__':
    unittest.main()
