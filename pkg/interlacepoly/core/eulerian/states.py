# Copyright (C) 2021 ISIS Rutherford Appleton Laboratory UKRI
# SPDX - License - Identifier: GPL-3.0-or-later
"""
Graph states of a 4-regular Eulerian digraph and the polynomials counting their components.

A state picks one of the two in/out pairings at every vertex. Following the pairings splits the
edges into consistently oriented cycles.
"""
from dataclasses import dataclass
from functools import partial
from logging import getLogger
from typing import Iterator, Optional, Sequence, Tuple

import numpy as np

from interlacepoly.core.eulerian.digraph import EulerianDigraph, Transition, require_valid, transitions
from interlacepoly.core.parallel.utility import summed_chunk_histograms
from interlacepoly.core.poly import UniPoly, divide_by_var, substitute
from interlacepoly.core.utility.data_containers import CLOSED_FORM_MAX_N, check_size
from interlacepoly.core.utility.progress_reporting import Progress

LOG = getLogger(__name__)


@dataclass(frozen=True)
class GraphState:
    """
    Bit v of choices is the pairing used at vertex v. successor[e] is the out-edge that
    in-edge e continues into.
    """
    choices: int
    successor: Tuple[int, ...]

    def components(self) -> int:
        return count_cycles(self.successor)


def count_cycles(successor: Sequence[int]) -> int:
    seen = [False] * len(successor)
    cycles = 0
    for start in range(len(successor)):
        if seen[start]:
            continue
        cycles += 1
        e = start
        while not seen[e]:
            seen[e] = True
            e = successor[e]
    return cycles


def _fill_successor(successor: list, table: Sequence[Transition], choices: int):
    for v, (i0, i1, o0, o1) in enumerate(table):
        if (choices >> v) & 1:
            successor[i0] = o1
            successor[i1] = o0
        else:
            successor[i0] = o0
            successor[i1] = o1


def enumerate_states(d: EulerianDigraph) -> Iterator[Tuple[GraphState, int]]:
    """
    Every state with its number of cycles. The edgeless digraph has one empty state with no cycles.
    """
    require_valid(d, allow_edgeless=True)
    if not d.edges:
        yield GraphState(0, ()), 0
        return

    table = transitions(d)
    successor = [0] * d.num_edges
    for choices in range(1 << d.n):
        _fill_successor(successor, table, choices)
        state = GraphState(choices, tuple(successor))
        yield state, state.components()


def state_histogram_chunk(table: Tuple[Transition, ...], num_edges: int, n: int, chunk: int,
                          chunk_bits: int) -> np.ndarray:
    low_bits = n - chunk_bits
    base = chunk << low_bits
    hist = np.zeros(num_edges + 1, dtype=np.int64)
    successor = [0] * num_edges
    for low in range(1 << low_bits):
        _fill_successor(successor, table, base | low)
        hist[count_cycles(successor)] += 1
    return hist


def state_histogram(d: EulerianDigraph, progress: Optional[Progress] = None) -> np.ndarray:
    """
    hist[k] is the number of states with k cycles.
    """
    require_valid(d, allow_edgeless=True)
    if not d.edges:
        return np.ones(1, dtype=np.int64)
    check_size(d.n, CLOSED_FORM_MAX_N, "State enumeration")
    kernel = partial(state_histogram_chunk, tuple(transitions(d)), d.num_edges, d.n)
    return summed_chunk_histograms(kernel, d.n, progress, msg="Graph states")


def circuit_partition_poly(d: EulerianDigraph, progress: Optional[Progress] = None) -> UniPoly:
    """
    f(G;x), the sum of x^k over the states, k the number of cycles. 1 for the edgeless digraph.
    """
    hist = state_histogram(d, progress)
    LOG.debug(f"State cycle counts: {hist.tolist()}")
    return UniPoly('x', tuple(int(c) for c in hist))


def martin_poly(d: EulerianDigraph, progress: Optional[Progress] = None) -> UniPoly:
    """
    m(G;x) from f(G;x) = x m(G;x+1): divide by x, then shift x to x-1.
    """
    f = circuit_partition_poly(d, progress)
    return substitute(divide_by_var(f), -1)
