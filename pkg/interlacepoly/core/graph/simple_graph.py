# Copyright (C) 2021 ISIS Rutherford Appleton Laboratory UKRI
# SPDX - License - Identifier: GPL-3.0-or-later
"""
Labelled undirected graphs on vertices 0..n-1, stored as one int bit row per vertex.

Bit w of row v is set iff v and w are joined, a set diagonal bit is a loop.
"""
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from interlacepoly.core.utility.data_containers import STRUCTURAL_MAX_N

VertexSet = Union[int, Iterable[int]]


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def vertices_of(mask: int) -> List[int]:
    return list(iter_bits(mask))


class SimpleGraph:
    __slots__ = ('n', 'adj', 'loops_allowed')

    def __init__(self, n: int, adj: Optional[Sequence[int]] = None, loops_allowed: bool = False):
        if not 0 <= n <= STRUCTURAL_MAX_N:
            raise ValueError(f"Graphs must have between 0 and {STRUCTURAL_MAX_N} vertices, got {n}")
        rows = tuple(int(r) for r in adj) if adj is not None else (0, ) * n
        if len(rows) != n:
            raise ValueError(f"Expected {n} adjacency rows, got {len(rows)}")

        for v, row in enumerate(rows):
            if row < 0 or row >> n:
                raise ValueError(f"Row {v} refers to vertices outside 0..{n - 1}")
            for w in iter_bits(row):
                if not (rows[w] >> v) & 1:
                    raise ValueError(f"Adjacency is not symmetric between {v} and {w}")
            if not loops_allowed and (row >> v) & 1:
                raise ValueError(f"Vertex {v} has a loop but loops are not allowed")

        self.n = n
        self.adj: Tuple[int, ...] = rows
        self.loops_allowed = loops_allowed

    @staticmethod
    def from_edges(n: int, edges: Iterable[Tuple[int, int]], loops_allowed: Optional[bool] = None) -> 'SimpleGraph':
        """
        :param loops_allowed: If None, loops are allowed exactly when the edge list contains one
        """
        rows = [0] * n
        has_loop = False
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"Edge ({u}, {v}) has a vertex outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            has_loop |= u == v
        return SimpleGraph(n, rows, has_loop if loops_allowed is None else loops_allowed)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def check_vertex(self, v: int):
        if not 0 <= v < self.n:
            raise ValueError(f"Vertex {v} is out of range for a graph on {self.n} vertices")

    def as_mask(self, vertices: VertexSet) -> int:
        """
        Normalises a vertex set given either as a bit mask or as an iterable of vertices.
        """
        if isinstance(vertices, int):
            if vertices < 0 or vertices >> self.n:
                raise ValueError(f"Vertex set {bin(vertices)} has vertices outside 0..{self.n - 1}")
            return vertices
        mask = 0
        for v in vertices:
            self.check_vertex(v)
            mask |= 1 << v
        return mask

    def has_edge(self, v: int, w: int) -> bool:
        self.check_vertex(v)
        self.check_vertex(w)
        return bool((self.adj[v] >> w) & 1)

    def is_looped(self, v: int) -> bool:
        return self.has_edge(v, v)

    def has_loops(self) -> bool:
        return any((row >> v) & 1 for v, row in enumerate(self.adj))

    def loop_mask(self) -> int:
        return sum(1 << v for v, row in enumerate(self.adj) if (row >> v) & 1)

    def neighbors(self, v: int) -> List[int]:
        self.check_vertex(v)
        return vertices_of(self.adj[v])

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return popcount(self.adj[v])

    def edges(self) -> List[Tuple[int, int]]:
        """
        Edges as (u, v) with u <= v, sorted lexicographically. Loops appear as (v, v).
        """
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> u << u)]

    def num_edges(self) -> int:
        return len(self.edges())

    def is_edgeless(self) -> bool:
        return not any(self.adj)

    def __eq__(self, other):
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"SimpleGraph(n={self.n}, edges={self.edges()})"
