# Copyright (C) 2021 ISIS Rutherford Appleton Laboratory UKRI
# SPDX - License - Identifier: GPL-3.0-or-later
"""
The vertex-nullity interlace polynomial q_N(G;x), computed five independent ways.
"""
from enum import Enum
from logging import getLogger
from typing import Dict, Optional, Set

from interlacepoly.core.gf2 import GF2Matrix, corank, nullity, rank_of_rows
from interlacepoly.core.graph import (SimpleGraph, adjacency_matrix, canonical_key, delete_vertex, least_edge,
                                      pivot, pivot_via_local_complements)
from interlacepoly.core.interlace.subset_sums import admissible_corank_histogram, induced_rank_histogram
from interlacepoly.core.interlace.two_variable import q2_closed
from interlacepoly.core.isotropic import tutte_martin_canonical
from interlacepoly.core.poly import UniPoly, add_shifted_power
from interlacepoly.core.utility.data_containers import CLOSED_FORM_MAX_N, check_size
from interlacepoly.core.utility.progress_reporting import Progress
from interlacepoly.helper import TRACE

LOG = getLogger(__name__)

X = UniPoly.monomial(1)
ONE = UniPoly.constant(1)


class QnMethod(str, Enum):
    RECURSIVE = 'recursive'
    CLOSED = 'closed'
    BOUCHET = 'bouchet'
    AVDH = 'avdh'
    ISOTROPIC = 'isotropic'


def require_loopless(g: SimpleGraph):
    if g.has_loops():
        raise ValueError("The vertex-nullity interlace polynomial is only defined for graphs without loops")


def qn_recursive(g: SimpleGraph) -> UniPoly:
    """
    x^n on the edgeless graph, otherwise q_N(G-v) + q_N(G^{vw}-w) on the least edge vw.
    """
    require_loopless(g)
    cache: Dict[bytes, UniPoly] = {}
    result = _pivot_recursion(g, cache)
    LOG.debug(f"Pivot recursion on {g.n} vertices visited {len(cache)} distinct graphs")
    return result


def _pivot_recursion(g: SimpleGraph, cache: Dict[bytes, UniPoly]) -> UniPoly:
    key = canonical_key(g)
    cached = cache.get(key)
    if cached is not None:
        return cached

    edge = least_edge(g)
    if edge is None:
        result = UniPoly.monomial(g.n)
    else:
        v, w = edge
        LOG.log(TRACE, f"Pivot recursion on edge ({v}, {w}) of a graph with {g.n} vertices")
        result = _pivot_recursion(delete_vertex(g, v), cache) + _pivot_recursion(delete_vertex(pivot(g, v, w), w),
                                                                                 cache)
    cache[key] = result
    return result


def recursion_edge_independence(g: SimpleGraph) -> Set[UniPoly]:
    """
    The value of the first recursion step for every choice of first edge, in both orientations.

    A well defined recursion gives a single polynomial. An edgeless graph gives the empty set.
    """
    require_loopless(g)
    results = set()
    for a, b in g.edges():
        for v, w in ((a, b), (b, a)):
            results.add(qn_recursive(delete_vertex(g, v)) + qn_recursive(delete_vertex(pivot(g, v, w), w)))
    return results


def qn_bouchet(g: SimpleGraph) -> UniPoly:
    """
    1 on the empty graph, x q_N(G-v) for an isolated v, q_N(G-v) + q_N(G*vwv - v) otherwise,
    with v the least vertex and w its least neighbour.
    """
    require_loopless(g)
    return _local_complement_recursion(g, {})


def _local_complement_recursion(g: SimpleGraph, cache: Dict[bytes, UniPoly]) -> UniPoly:
    if g.n == 0:
        return ONE

    key = canonical_key(g)
    cached = cache.get(key)
    if cached is not None:
        return cached

    v = 0
    neighbourhood = g.adj[v]
    if not neighbourhood:
        result = X * _local_complement_recursion(delete_vertex(g, v), cache)
    else:
        w = (neighbourhood & -neighbourhood).bit_length() - 1
        result = _local_complement_recursion(delete_vertex(g, v), cache) + _local_complement_recursion(
            delete_vertex(pivot_via_local_complements(g, v, w), v), cache)
    cache[key] = result
    return result


def qn_closed(g: SimpleGraph, progress: Optional[Progress] = None) -> UniPoly:
    """
    Sum over every W of (x-1)^(|W| - rank(G[W])).
    """
    require_loopless(g)
    check_size(g.n, CLOSED_FORM_MAX_N, "The closed form")
    hist = induced_rank_histogram(g.adj, g.n, progress, msg="q_N subset sum")
    return UniPoly.from_exponent_histogram(hist.sum(axis=0), -1)


def qn_closed_reference(g: SimpleGraph) -> UniPoly:
    """
    The same sum as qn_closed, extracting each |W| x |W| matrix and eliminating it from scratch.
    """
    require_loopless(g)
    check_size(g.n, CLOSED_FORM_MAX_N, "The closed form")
    result = UniPoly.zero()
    for subset in range(1 << g.n):
        result = add_shifted_power(result, nullity(adjacency_matrix(g, subset)), -1)
    return result


def extended_adjacency(g: SimpleGraph) -> GF2Matrix:
    """
    The n x 2n matrix [A | I].
    """
    return adjacency_matrix(g).hstack(GF2Matrix.identity(g.n))


def admissible_submatrix(extended: GF2Matrix, selection: int) -> GF2Matrix:
    """
    L_S for the admissible column set picking column i of A when bit i of selection is set and
    column i of I otherwise.
    """
    n = extended.rows
    return extended.select_columns([i if (selection >> i) & 1 else n + i for i in range(n)])


def qn_avdh(g: SimpleGraph, progress: Optional[Progress] = None) -> UniPoly:
    """
    Sum over the 2^n admissible column sets S of [A | I] of (x-1)^corank(L_S).
    """
    require_loopless(g)
    check_size(g.n, CLOSED_FORM_MAX_N, "The admissible column set sum")
    extended = extended_adjacency(g)
    hist = admissible_corank_histogram(extended.row_ints(), g.n, progress)
    return UniPoly.from_exponent_histogram(hist, -1)


def qn_avdh_reference(g: SimpleGraph) -> UniPoly:
    require_loopless(g)
    check_size(g.n, CLOSED_FORM_MAX_N, "The admissible column set sum")
    extended = extended_adjacency(g)
    result = UniPoly.zero()
    for selection in range(1 << g.n):
        result = add_shifted_power(result, corank(admissible_submatrix(extended, selection)), -1)
    return result


def qn_from_q2(g: SimpleGraph) -> UniPoly:
    """
    q(G;2,y), renamed into the variable of q_N.
    """
    require_loopless(g)
    return q2_closed(g).eval_at(2).rename('x')


def full_rank_subset_count(g: SimpleGraph) -> int:
    """
    Number of W whose induced adjacency matrix is nonsingular, counted directly.
    """
    check_size(g.n, CLOSED_FORM_MAX_N, "The subset count")
    count = 0
    for subset in range(1 << g.n):
        members = [v for v in range(g.n) if (subset >> v) & 1]
        if rank_of_rows([g.adj[v] & subset for v in members]) == len(members):
            count += 1
    return count


def qn(g: SimpleGraph, method: QnMethod = QnMethod.CLOSED, progress: Optional[Progress] = None) -> UniPoly:
    method = QnMethod(method)
    LOG.info(f"Computing q_N of a graph with {g.n} vertices using the {method.value} method")
    if method is QnMethod.RECURSIVE:
        return qn_recursive(g)
    if method is QnMethod.CLOSED:
        return qn_closed(g, progress)
    if method is QnMethod.BOUCHET:
        return qn_bouchet(g)
    if method is QnMethod.AVDH:
        return qn_avdh(g, progress)
    return tutte_martin_canonical(g, progress)
