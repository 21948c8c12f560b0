# Copyright (C) 2021 ISIS Rutherford Appleton Laboratory UKRI
# SPDX - License - Identifier: GPL-3.0-or-later

import unittest

import pytest

from interlacepoly.core.eulerian import (ChordDiagram, EulerianDigraph, all_euler_circuits, chord_diagram_from_circuit,
                                         circle_graph, circle_graph_of, euler_circuit, interlace_matrix,
                                         interlace_side, is_interlaced, random_eulerian_digraph,
                                         verify_circuit_partition_identity)
from interlacepoly.core.gf2 import GF2Matrix
from interlacepoly.test_helpers.unit_test_helper import K1, K2, doubled_two_cycle, edgeless, two_loop_vertex, uni


class EulerCircuitTest(unittest.TestCase):
    def test_two_loop_vertex(self):
        self.assertEqual(euler_circuit(two_loop_vertex()), (0, 0))

    def test_doubled_two_cycle(self):
        self.assertEqual(euler_circuit(doubled_two_cycle()), (0, 1, 0, 1))

    def test_edgeless_rejected(self):
        with self.assertRaises(ValueError):
            euler_circuit(EulerianDigraph(1))

    def test_uses_every_edge(self):
        d = random_eulerian_digraph(7, 5)
        visits = euler_circuit(d)
        self.assertEqual(len(visits), d.num_edges)
        walk_edges = sorted((visits[i], visits[(i + 1) % len(visits)]) for i in range(len(visits)))
        self.assertEqual(walk_edges, sorted(d.edges))

    def test_all_circuits_of_small_digraphs(self):
        self.assertEqual(all_euler_circuits(two_loop_vertex()), [(0, 0)])
        self.assertEqual(all_euler_circuits(doubled_two_cycle()), [(0, 1, 0, 1), (0, 1, 0, 1)])

    def test_all_circuits_capped(self):
        with self.assertRaises(ValueError):
            all_euler_circuits(random_eulerian_digraph(5, 0))


class ChordDiagramTest(unittest.TestCase):
    def test_from_circuit(self):
        self.assertEqual(str(chord_diagram_from_circuit((0, 0))), "0 0")
        self.assertEqual(str(chord_diagram_from_circuit(('u', 'v', 'u', 'v'))), "u v u v")

    def test_rejects_single_occurrence(self):
        with self.assertRaises(ValueError):
            ChordDiagram(('a', 'b', 'a'))
        with self.assertRaises(ValueError):
            ChordDiagram(('a', 'a', 'a', 'a'))

    def test_circle_graphs(self):
        self.assertEqual(circle_graph(ChordDiagram(('v', 'v'))), K1)
        self.assertEqual(circle_graph(ChordDiagram(('u', 'v', 'u', 'v'))), K2)
        self.assertEqual(circle_graph(ChordDiagram(('a', 'b', 'b', 'a'))), edgeless(2))
        self.assertEqual(circle_graph(ChordDiagram(())), edgeless(0))

    def test_is_interlaced(self):
        cd = ChordDiagram(('a', 'b', 'c', 'a', 'c', 'b'))
        self.assertTrue(is_interlaced(cd, 'a', 'b'))
        self.assertTrue(is_interlaced(cd, 'a', 'c'))
        self.assertFalse(is_interlaced(cd, 'b', 'c'))
        with self.assertRaises(ValueError):
            is_interlaced(cd, 'a', 'z')

    def test_interlacement_is_rotation_invariant(self):
        word = ['a', 'b', 'c', 'a', 'c', 'b']
        expected = circle_graph(ChordDiagram(tuple(word)))
        for shift in range(len(word)):
            self.assertEqual(circle_graph(ChordDiagram(tuple(word[shift:] + word[:shift]))), expected)

    def test_interlace_matrix(self):
        self.assertEqual(interlace_matrix(ChordDiagram(('a', 'b', 'a', 'b'))), GF2Matrix.from_dense([[0, 1], [1, 0]]))


class CircuitPartitionIdentityTest(unittest.TestCase):
    def test_two_loop_vertex(self):
        self.assertEqual(circle_graph_of(two_loop_vertex()), K1)
        self.assertEqual(interlace_side(K1), uni(0, 1, 1))
        self.assertTrue(verify_circuit_partition_identity(two_loop_vertex()))

    def test_doubled_two_cycle(self):
        self.assertEqual(circle_graph_of(doubled_two_cycle()), K2)
        self.assertEqual(interlace_side(K2), uni(0, 2, 2))
        self.assertTrue(verify_circuit_partition_identity(doubled_two_cycle()))


@pytest.mark.parametrize('seed', range(100))
def test_identity_on_random_digraphs(seed):
    d = random_eulerian_digraph(1 + seed % 5, seed)
    assert verify_circuit_partition_identity(d)


@pytest.mark.parametrize('seed', range(24))
def test_identity_for_every_circuit(seed):
    d = random_eulerian_digraph(1 + seed % 4, seed)
    circuits = all_euler_circuits(d)
    assert circuits
    for visits in circuits:
        assert verify_circuit_partition_identity(d, visits)


if __name__ == '__main__':
    unittest.main()
