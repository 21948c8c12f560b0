# Copyright (C) 2021 ISIS Rutherford Appleton Laboratory UKRI
# SPDX - License - Identifier: GPL-3.0-or-later

from logging import getLogger
from typing import List, Tuple

from interlacepoly.core.eulerian.digraph import EulerianDigraph, require_valid
from interlacepoly.core.utility.data_containers import EULER_CIRCUITS_MAX_N, check_size

LOG = getLogger(__name__)


def euler_circuit_edges(d: EulerianDigraph) -> List[int]:
    """
    Hierholzer's algorithm from the least vertex, always leaving on the least unused out-edge.
    """
    require_valid(d)
    out_edges = [d.out_edges(v) for v in range(d.n)]
    next_out = [0] * d.n
    used = [False] * d.num_edges

    start = 0
    vertex_stack = [start]
    edge_stack: List[int] = []
    circuit: List[int] = []
    while vertex_stack:
        v = vertex_stack[-1]
        while next_out[v] < len(out_edges[v]) and used[out_edges[v][next_out[v]]]:
            next_out[v] += 1
        if next_out[v] < len(out_edges[v]):
            e = out_edges[v][next_out[v]]
            used[e] = True
            vertex_stack.append(d.head(e))
            edge_stack.append(e)
        else:
            vertex_stack.pop()
            if edge_stack:
                circuit.append(edge_stack.pop())
    circuit.reverse()
    return circuit


def visits_of(d: EulerianDigraph, edge_sequence: List[int]) -> Tuple[int, ...]:
    return tuple(d.tail(e) for e in edge_sequence)


def euler_circuit(d: EulerianDigraph) -> Tuple[int, ...]:
    """
    The vertices in the order the circuit visits them, one entry per edge.
    """
    return visits_of(d, euler_circuit_edges(d))


def all_euler_circuits(d: EulerianDigraph) -> List[Tuple[int, ...]]:
    """
    Every Euler circuit as a visit sequence. The least out-edge of the least vertex is fixed as the
    first edge so each circuit is found once; parallel edges can make two circuits visit the same
    vertex sequence.
    """
    require_valid(d)
    check_size(d.n, EULER_CIRCUITS_MAX_N, "Euler circuit enumeration")
    out_edges = [d.out_edges(v) for v in range(d.n)]
    start = 0
    first = out_edges[start][0]
    used = [False] * d.num_edges
    used[first] = True
    path = [first]
    circuits: List[Tuple[int, ...]] = []

    def extend(v: int):
        if len(path) == d.num_edges:
            if v == start:
                circuits.append(visits_of(d, path))
            return
        for e in out_edges[v]:
            if not used[e]:
                used[e] = True
                path.append(e)
                extend(d.head(e))
                path.pop()
                used[e] = False

    extend(d.head(first))
    LOG.debug(f"Found {len(circuits)} Euler circuits on {d.n} vertices")
    return circuits
