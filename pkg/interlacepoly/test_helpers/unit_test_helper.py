# Copyright (C) 2021 ISIS Rutherford Appleton Laboratory UKRI
# SPDX - License - Identifier: GPL-3.0-or-later

import os
import sys
from io import StringIO

from interlacepoly.core.eulerian import EulerianDigraph
from interlacepoly.core.graph import SimpleGraph
from interlacepoly.core.graph.generators import (all_graphs, all_looped_graphs, complete, cycle, edgeless,  # noqa: F401
                                                 looped_vertex, path, random_graph, star)
from interlacepoly.core.poly import UniPoly

SLOW_TESTS_ENV_VAR = 'INTERLACEPOLY_RUN_SLOW'

K1 = complete(1)
K2 = complete(2)
K3 = complete(3)
P3 = path(3)
P4 = path(4)


def run_slow_tests() -> bool:
    return os.environ.get(SLOW_TESTS_ENV_VAR, '') not in ('', '0')


def uni(*coeffs, var='x') -> UniPoly:
    """
    Polynomial from its coefficients, lowest degree first.
    """
    return UniPoly(var, coeffs)


def graph(n: int, *edges) -> SimpleGraph:
    return SimpleGraph.from_edges(n, edges)


def two_loop_vertex() -> EulerianDigraph:
    return EulerianDigraph(1, [(0, 0), (0, 0)])


def doubled_two_cycle() -> EulerianDigraph:
    return EulerianDigraph(2, [(0, 1), (0, 1), (1, 0), (1, 0)])


class IgnoreOutputStreams(object):
    def __init__(self):
        self.stdout = None
        self.stderr = None

    def __enter__(self):
        self.stdout = sys.stdout
        self.stderr = sys.stderr

        sys.stdout = StringIO()
        sys.stderr = StringIO()

    def __exit__(self, type, value, traceback):
        sys.stdout = self.stdout
        sys.stderr = self.stderr
