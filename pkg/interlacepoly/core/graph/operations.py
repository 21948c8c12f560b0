# Copyright (C) 2021 ISIS Rutherford Appleton Laboratory UKRI
# SPDX - License - Identifier: GPL-3.0-or-later
"""
Pivots, local complementation and the other graph operations the interlace recursions are
built from. Every operation returns a new graph.
"""
from typing import List

from interlacepoly.core.gf2 import GF2Matrix
from interlacepoly.core.graph.simple_graph import SimpleGraph, VertexSet, iter_bits, popcount

EMPTY_GRAPH_KEY = b'\x00'


def neighborhood_set(g: SimpleGraph, vertices: VertexSet) -> int:
    """
    Vertices adjacent to an odd number of the given vertices, as a bit mask.
    """
    result = 0
    for v in iter_bits(g.as_mask(vertices)):
        result ^= g.adj[v]
    return result


def pivot(g: SimpleGraph, v: int, w: int) -> SimpleGraph:
    """
    The pivot G^{vw} on the edge vw.

    The other neighbours of v and w fall in three classes: adjacent to v only, to w only, or to both.
    Every pair of vertices from two different classes has its adjacency toggled. Loops away from v and w
    are carried over unchanged.
    """
    if v == w or not g.has_edge(v, w):
        raise ValueError(f"Pivot needs an edge, ({v}, {w}) is not an edge")
    if g.is_looped(v) or g.is_looped(w):
        raise ValueError(f"Cannot pivot on ({v}, {w}): an end vertex has a loop")

    ends = (1 << v) | (1 << w)
    nv = g.adj[v] & ~ends
    nw = g.adj[w] & ~ends
    only_v = nv & ~nw
    only_w = nw & ~nv
    both = nv & nw

    rows = list(g.adj)
    for a, b in ((only_v, only_w), (only_v, both), (only_w, both)):
        for u in iter_bits(a):
            rows[u] ^= b
        for u in iter_bits(b):
            rows[u] ^= a
    return SimpleGraph(g.n, rows, g.loops_allowed)


def local_complement(g: SimpleGraph, v: int) -> SimpleGraph:
    """
    G*v: complements the subgraph induced by the neighbourhood of v.

    At an unlooped v the edges between distinct neighbours are toggled. At a looped v every pair
    of neighbours other than v is toggled including the pair (u, u), so the loops of the neighbours
    flip as well.
    """
    g.check_vertex(v)
    rows = list(g.adj)
    if g.is_looped(v):
        others = g.adj[v] & ~(1 << v)
        for u in iter_bits(others):
            rows[u] ^= others
    else:
        neighbourhood = g.adj[v]
        for u in iter_bits(neighbourhood):
            rows[u] ^= neighbourhood & ~(1 << u)
    return SimpleGraph(g.n, rows, g.loops_allowed)


def pivot_via_local_complements(g: SimpleGraph, v: int, w: int) -> SimpleGraph:
    """
    G*vwv, the local complement at v, then w, then v again.

    On a loopless edge this equals pivot(g, v, w) with the labels v and w exchanged.
    """
    if v == w or not g.has_edge(v, w):
        raise ValueError(f"({v}, {w}) is not an edge")
    return local_complement(local_complement(local_complement(g, v), w), v)


def swap_labels(g: SimpleGraph, v: int, w: int) -> SimpleGraph:
    g.check_vertex(v)
    g.check_vertex(w)
    if v == w:
        return g

    def swap_bits(row: int) -> int:
        bv = (row >> v) & 1
        bw = (row >> w) & 1
        if bv != bw:
            row ^= (1 << v) | (1 << w)
        return row

    rows = [swap_bits(row) for row in g.adj]
    rows[v], rows[w] = rows[w], rows[v]
    return SimpleGraph(g.n, rows, g.loops_allowed)


def _compress(row: int, kept: List[int]) -> int:
    result = 0
    for i, u in enumerate(kept):
        if (row >> u) & 1:
            result |= 1 << i
    return result


def induced_subgraph(g: SimpleGraph, vertices: VertexSet) -> SimpleGraph:
    """
    The subgraph induced by the vertices, re-indexed in increasing vertex order.
    """
    kept = list(iter_bits(g.as_mask(vertices)))
    return SimpleGraph(len(kept), [_compress(g.adj[u], kept) for u in kept], g.loops_allowed)


def adjacency_matrix(g: SimpleGraph, vertices: VertexSet = None) -> GF2Matrix:
    """
    |W| x |W| adjacency matrix of G[W] over GF(2), loops on the diagonal. W defaults to all vertices.
    """
    sub = g if vertices is None else induced_subgraph(g, vertices)
    return GF2Matrix.from_rows(list(sub.adj), sub.n)


def is_even_subgraph(g: SimpleGraph, vertices: VertexSet) -> bool:
    """
    True iff every vertex of G|P has even degree in G|P. Loops are not counted.
    """
    mask = g.as_mask(vertices)
    return all(popcount(g.adj[v] & mask & ~(1 << v)) % 2 == 0 for v in iter_bits(mask))


def delete_vertex(g: SimpleGraph, v: int) -> SimpleGraph:
    g.check_vertex(v)
    return induced_subgraph(g, g.vertex_mask & ~(1 << v))


def delete_vertices(g: SimpleGraph, *vertices: int) -> SimpleGraph:
    mask = g.vertex_mask
    for v in vertices:
        g.check_vertex(v)
        mask &= ~(1 << v)
    return induced_subgraph(g, mask)


def canonical_key(g: SimpleGraph) -> bytes:
    """
    n as one byte followed by each row as 8 little-endian bytes. The labelling is kept as is.
    """
    if g.n == 0:
        return EMPTY_GRAPH_KEY
    return bytes((g.n, )) + b''.join(row.to_bytes(8, 'little') for row in g.adj)


def least_edge(g: SimpleGraph, loopless_ends: bool = False):
    """
    The lexicographically least edge (v, w) with v < w, or None.

    :param loopless_ends: Only consider edges with no loop at either end
    """
    loops = g.loop_mask() if loopless_ends else 0
    for v in range(g.n):
        if (loops >> v) & 1:
            continue
        later = (g.adj[v] >> (v + 1) << (v + 1)) & ~loops
        if later:
            return v, (later & -later).bit_length() - 1
    return None
