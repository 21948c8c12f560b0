# Copyright (C) 2021 ISIS Rutherford Appleton Laboratory UKRI
# SPDX - License - Identifier: GPL-3.0-or-later

import itertools
from typing import Iterator

import numpy as np

from interlacepoly.core.graph.simple_graph import SimpleGraph


def edgeless(n: int) -> SimpleGraph:
    return SimpleGraph(n)


def complete(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, itertools.combinations(range(n), 2))


def path(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> SimpleGraph:
    if n < 3:
        raise ValueError(f"A cycle needs at least 3 vertices, got {n}")
    return SimpleGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> SimpleGraph:
    """
    Vertex 0 joined to the n - 1 others.
    """
    return SimpleGraph.from_edges(n, ((0, i) for i in range(1, n)))


def looped_vertex() -> SimpleGraph:
    return SimpleGraph.from_edges(1, [(0, 0)])


def all_graphs(n: int) -> Iterator[SimpleGraph]:
    """
    Every labelled simple graph on n vertices, 2^(n(n-1)/2) of them.
    """
    pairs = list(itertools.combinations(range(n), 2))
    for selection in range(1 << len(pairs)):
        yield SimpleGraph.from_edges(n, (p for i, p in enumerate(pairs) if (selection >> i) & 1),
                                     loops_allowed=False)


def all_looped_graphs(n: int) -> Iterator[SimpleGraph]:
    """
    Every labelled graph on n vertices with every pattern of loops.
    """
    for g in all_graphs(n):
        for loops in range(1 << n):
            rows = [row | (((loops >> v) & 1) << v) for v, row in enumerate(g.adj)]
            yield SimpleGraph(n, rows, loops_allowed=True)


def random_graph(n: int, seed: int, edge_probability: float = 0.5, loop_probability: float = 0.0) -> SimpleGraph:
    """
    Seeded G(n, p) graph, optionally with random loops.
    """
    rng = np.random.default_rng(seed)
    upper = np.triu(rng.random((n, n)) < edge_probability, k=1)
    loops = rng.random(n) < loop_probability
    edges = [(int(u), int(v)) for u, v in zip(*np.nonzero(upper))]
    edges += [(int(v), int(v)) for v in np.flatnonzero(loops)]
    return SimpleGraph.from_edges(n, edges, loops_allowed=loop_probability > 0)
