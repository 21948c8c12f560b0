# Copyright (C) 2021 ISIS Rutherford Appleton Laboratory UKRI
# SPDX - License - Identifier: GPL-3.0-or-later
"""
4-regular Eulerian digraphs: every vertex has two edges oriented inward and two outward.
Edges keep the index they were given, so parallel edges and loops stay distinguishable.
"""
from dataclasses import dataclass
from logging import getLogger
from typing import List, NamedTuple, Sequence, Tuple

import numpy as np

LOG = getLogger(__name__)

class ValidationResult(NamedTuple):
    """
    Truthy exactly when the digraph is valid, reason names the first violation otherwise.
    """
    valid: bool
    reason: str

    def __bool__(self):
        return self.valid


# at one vertex: the two in-edges and the two out-edges, each pair sorted by edge index
Transition = Tuple[int, int, int, int]


@dataclass(frozen=True)
class EulerianDigraph:
    n: int
    edges: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"Vertex count must be non-negative, got {self.n}")
        edges = tuple((int(t), int(h)) for t, h in self.edges)
        for i, (t, h) in enumerate(edges):
            if not (0 <= t < self.n and 0 <= h < self.n):
                raise ValueError(f"Edge {i} ({t}, {h}) has an end outside of 0..{self.n - 1}")
        object.__setattr__(self, 'edges', edges)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def out_edges(self, v: int) -> List[int]:
        return [i for i, (t, _) in enumerate(self.edges) if t == v]

    def in_edges(self, v: int) -> List[int]:
        return [i for i, (_, h) in enumerate(self.edges) if h == v]

    def head(self, e: int) -> int:
        return self.edges[e][1]

    def tail(self, e: int) -> int:
        return self.edges[e][0]


def _connected(d: EulerianDigraph) -> bool:
    parent = list(range(d.n))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for t, h in d.edges:
        parent[find(t)] = find(h)
    return len({find(v) for v in range(d.n)}) <= 1


def validate(d: EulerianDigraph) -> ValidationResult:
    """
    Checks the 2-in 2-out degrees and connectivity, returning the first violation found.
    """
    if not d.edges:
        return ValidationResult(False, "The digraph has no edges")
    out_degree = np.bincount([t for t, _ in d.edges], minlength=d.n)
    in_degree = np.bincount([h for _, h in d.edges], minlength=d.n)
    for v in range(d.n):
        if in_degree[v] != 2 or out_degree[v] != 2:
            return ValidationResult(False, f"Vertex {v} has in-degree {in_degree[v]} and out-degree "
                                    f"{out_degree[v]}, expected 2 and 2")
    if not _connected(d):
        return ValidationResult(False, "The digraph is not connected")
    return ValidationResult(True, "")


def require_valid(d: EulerianDigraph, allow_edgeless: bool = False):
    if allow_edgeless and not d.edges:
        return
    result = validate(d)
    if not result.valid:
        raise ValueError(f"Not a 4-regular Eulerian digraph: {result.reason}")


def transitions(d: EulerianDigraph) -> List[Transition]:
    """
    (i0, i1, o0, o1) for every vertex. Choice 0 joins i0 to o0 and i1 to o1, choice 1 joins i0 to o1
    and i1 to o0.
    """
    require_valid(d)
    result = []
    for v in range(d.n):
        i0, i1 = d.in_edges(v)
        o0, o1 = d.out_edges(v)
        result.append((i0, i1, o0, o1))
    return result


def from_closed_walk(walk: Sequence[int], n: int) -> EulerianDigraph:
    """
    The digraph whose edges join consecutive entries of the walk, the last one back to the first.
    """
    k = len(walk)
    return EulerianDigraph(n, tuple((walk[i], walk[(i + 1) % k]) for i in range(k)))


def random_eulerian_digraph(n: int, seed: int) -> EulerianDigraph:
    """
    Seeded random closed walk that visits every vertex exactly twice, read off as edges.
    """
    if n < 1:
        raise ValueError(f"A random Eulerian digraph needs at least one vertex, got {n}")
    rng = np.random.default_rng(seed)
    walk = [int(v) for v in rng.permutation(np.repeat(np.arange(n), 2))]
    d = from_closed_walk(walk, n)
    LOG.debug(f"Random Eulerian digraph n={n} seed={seed}: {d.edges}")
    return d
