# Copyright (C) 2021 ISIS Rutherford Appleton Laboratory UKRI
# SPDX - License - Identifier: GPL-3.0-or-later
"""
The two-variable interlace polynomial q(G;x,y). Loops are allowed.
"""
from logging import getLogger
from typing import Dict, Optional

from interlacepoly.core.graph import (SimpleGraph, canonical_key, delete_vertex, delete_vertices, least_edge,
                                      local_complement, pivot)
from interlacepoly.core.interlace.subset_sums import induced_rank_histogram
from interlacepoly.core.poly import BiPoly
from interlacepoly.core.utility.data_containers import CLOSED_FORM_MAX_N, check_size
from interlacepoly.core.utility.progress_reporting import Progress
from interlacepoly.helper import TRACE

LOG = getLogger(__name__)

VARS = ('x', 'y')
# (x-1)^2 - 1
PIVOT_WEIGHT = BiPoly(VARS, {(2, 0): 1, (1, 0): -2})
# x - 1
LOOP_WEIGHT = BiPoly(VARS, {(1, 0): 1, (0, 0): -1})


def q2_closed(g: SimpleGraph, progress: Optional[Progress] = None) -> BiPoly:
    """
    Sum over every W of (x-1)^rank(G[W]) (y-1)^nullity(G[W]).
    """
    check_size(g.n, CLOSED_FORM_MAX_N, "The closed form")
    hist = induced_rank_histogram(g.adj, g.n, progress, msg="q subset sum")
    return BiPoly.from_exponent_histogram(hist, -1, -1, VARS)


def q2_reduction(g: SimpleGraph) -> BiPoly:
    """
    Reduces on the least edge without loops at its ends:
        q(G) = q(G-a) + q(G^{ab}-b) + ((x-1)^2 - 1) q(G^{ab}-a-b)
    else on the least looped vertex:
        q(G) = q(G-a) + (x-1) q(G^a-a)
    down to q(E_n) = y^n.
    """
    cache: Dict[bytes, BiPoly] = {}
    result = _reduce(g, cache)
    LOG.debug(f"Two-variable reduction on {g.n} vertices visited {len(cache)} distinct graphs")
    return result


def _reduce(g: SimpleGraph, cache: Dict[bytes, BiPoly]) -> BiPoly:
    key = canonical_key(g)
    cached = cache.get(key)
    if cached is not None:
        return cached

    edge = least_edge(g, loopless_ends=True)
    loops = g.loop_mask()
    if edge is not None:
        a, b = edge
        LOG.log(TRACE, f"Pivot reduction on ({a}, {b}) of a graph with {g.n} vertices")
        pivoted = pivot(g, a, b)
        result = _reduce(delete_vertex(g, a), cache) + _reduce(delete_vertex(pivoted, b), cache) + \
            PIVOT_WEIGHT * _reduce(delete_vertices(pivoted, a, b), cache)
    elif loops:
        a = (loops & -loops).bit_length() - 1
        LOG.log(TRACE, f"Loop reduction on {a} of a graph with {g.n} vertices")
        result = _reduce(delete_vertex(g, a), cache) + LOOP_WEIGHT * _reduce(
            delete_vertex(local_complement(g, a), a), cache)
    else:
        # no loops and no edge between unlooped vertices leaves the edgeless graph
        result = BiPoly(VARS, {(0, g.n): 1})

    cache[key] = result
    return result
