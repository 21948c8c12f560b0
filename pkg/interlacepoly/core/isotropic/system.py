# Copyright (C) 2021 ISIS Rutherford Appleton Laboratory UKRI
# SPDX - License - Identifier: GPL-3.0-or-later
"""
Isotropic systems given by a graphic presentation (G, A, B), where L = {A(P) + B(N(P)) : P subset of V}.
"""
from dataclasses import dataclass, field
from logging import getLogger
from typing import Dict, List, Sequence, Tuple

from interlacepoly.core.gf2 import GF2Matrix, kernel_basis, pivot_table, rank, rank_of_rows, stack_rank
from interlacepoly.core.graph import SimpleGraph, adjacency_matrix, induced_subgraph, is_even_subgraph, \
    neighborhood_set
from interlacepoly.core.graph.simple_graph import VertexSet, iter_bits, popcount
from interlacepoly.core.isotropic.klein import KleinElement, KVector, kv_form

LOG = getLogger(__name__)


def is_isotropic(basis: Sequence[KVector], n: int) -> bool:
    """
    True iff the vectors span an n-dimensional subspace of K^V on which the form vanishes.
    """
    if any(b.n != n for b in basis):
        return False
    if rank_of_rows(b.flatten() for b in basis) != n:
        return False
    return all(kv_form(a, b) == 0 for i, a in enumerate(basis) for b in basis[i + 1:])


@dataclass(frozen=True)
class IsotropicSystem:
    n: int
    basis: Tuple[KVector, ...]
    pivots: Dict[int, int] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, 'basis', tuple(self.basis))
        object.__setattr__(self, 'pivots', pivot_table(b.flatten() for b in self.basis))

    @staticmethod
    def from_basis(n: int, basis: Sequence[KVector]) -> 'IsotropicSystem':
        if len(basis) != n or not is_isotropic(basis, n):
            raise ValueError(f"The {len(basis)} vectors do not span an isotropic subspace of dimension {n}")
        return IsotropicSystem(n, tuple(basis))

    def as_matrix(self) -> GF2Matrix:
        return GF2Matrix.from_rows([b.flatten() for b in self.basis], 2 * self.n)

    def members(self) -> List[KVector]:
        """
        All 2^n vectors of L.
        """
        result = []
        for selection in range(1 << self.n):
            vector = KVector(self.n)
            for i in iter_bits(selection):
                vector = vector + self.basis[i]
            result.append(vector)
        return result


def check_presentation(g: SimpleGraph, a: KVector, b: KVector):
    if g.has_loops():
        raise ValueError("Graphic presentations need a graph without loops")
    for name, vector in (('A', a), ('B', b)):
        if vector.n != g.n:
            raise ValueError(f"{name} has length {vector.n}, the graph has {g.n} vertices")
        if not vector.nowhere_zero():
            raise ValueError(f"{name} = {vector} takes the value 0")
    same = ~((a.row1 ^ b.row1) | (a.row2 ^ b.row2)) & g.vertex_mask
    if same:
        raise ValueError(f"A and B agree at vertex {(same & -same).bit_length() - 1}")


def vector_LP(g: SimpleGraph, a: KVector, b: KVector, vertices: VertexSet) -> KVector:
    """
    A(P) + B(N(P)), the member of L indexed by P.
    """
    check_presentation(g, a, b)
    mask = g.as_mask(vertices)
    return a.restrict(mask) + b.restrict(neighborhood_set(g, mask))


def _presentation_basis(g: SimpleGraph, a: KVector, b: KVector) -> List[KVector]:
    return [a.restrict(1 << v) + b.restrict(g.adj[v]) for v in range(g.n)]


def _validated(g: SimpleGraph, basis: List[KVector]) -> IsotropicSystem:
    LOG.debug(f"Validating a graphic system on {g.n} vertices")
    if not is_isotropic(basis, g.n):
        raise RuntimeError(f"Graphic presentation on {g.n} vertices did not give an isotropic system")
    return IsotropicSystem(g.n, tuple(basis))


def graphic_system(g: SimpleGraph, a: KVector, b: KVector) -> IsotropicSystem:
    """
    The system with basis L_{v} = A({v}) + B(N(v)), one vector per vertex.
    """
    check_presentation(g, a, b)
    return _validated(g, _presentation_basis(g, a, b))


def graphic_system_swapped(g: SimpleGraph, a: KVector, b: KVector) -> IsotropicSystem:
    """
    The system L = {A(N(P)) + B(P)}, the roles of A and B exchanged.
    """
    check_presentation(g, a, b)
    return _validated(g, _presentation_basis(g, b, a))


def f_hat_basis(f: KVector) -> List[KVector]:
    """
    Basis of F^ = {F(P) : P subset of V}: F(v) at position v and zero elsewhere.
    """
    if not f.nowhere_zero():
        raise ValueError(f"F = {f} takes the value 0")
    return [f.restrict(1 << v) for v in range(f.n)]


def in_f_hat(vector: KVector, f: KVector) -> bool:
    """
    True iff the vector agrees with F wherever it is nonzero.
    """
    differs = (vector.row1 ^ f.row1) | (vector.row2 ^ f.row2)
    return not (vector.support & differs)


def dim_intersection(system: IsotropicSystem, f: KVector) -> int:
    """
    dim(L n F^) = dim L + dim F^ - dim(L + F^) = 2n - rank of the stacked bases.
    """
    if f.n != system.n:
        raise ValueError(f"F has length {f.n}, the system has {system.n} positions")
    f_hat = GF2Matrix.from_rows([v.flatten() for v in f_hat_basis(f)], 2 * f.n)
    return 2 * system.n - stack_rank(system.as_matrix(), f_hat)


def dim_via_rank_formula(g: SimpleGraph, f: KVector) -> int:
    """
    |F_x| - rank of the adjacency matrix of G|F_x, for F taking only the values x and y.
    """
    if f.n != g.n:
        raise ValueError(f"F has length {f.n}, the graph has {g.n} vertices")
    allowed = f.positions_of(KleinElement.X) | f.positions_of(KleinElement.Y)
    if allowed != g.vertex_mask:
        raise ValueError(f"F = {f} must only take the values x and y")
    f_x = f.positions_of(KleinElement.X)
    return popcount(f_x) - rank(adjacency_matrix(g, f_x))


def subspace_u_basis(g: SimpleGraph, f: KVector) -> List[int]:
    """
    Basis of U = {P subset of F_x : every vertex of F_x has an even number of neighbours in P},
    each P a vertex mask of G.
    """
    f_x = f.positions_of(KleinElement.X)
    kept = list(iter_bits(f_x))
    basis = []
    for vector in kernel_basis(adjacency_matrix(g, f_x)):
        basis.append(sum(1 << kept[i] for i in iter_bits(vector)))
    return basis


def intersection_members(g: SimpleGraph, a: KVector, b: KVector, f: KVector) -> List[KVector]:
    """
    Every member of L n F^, as the image of the kernel of the map P -> <L_P(v), F(v)> for v in V.

    L_P(v) lies in {0, F(v)} exactly when its form with F(v) vanishes, and that form is linear in P.
    For A = x, B = y and F in {x,y}^V the kernel is U.
    """
    check_presentation(g, a, b)
    if f.n != g.n:
        raise ValueError(f"F has length {f.n}, the graph has {g.n} vertices")
    if not f.nowhere_zero():
        raise ValueError(f"F = {f} takes the value 0")
    rows = []
    for v in range(g.n):
        row = (1 << v) if a[v].form(f[v]) else 0
        if b[v].form(f[v]):
            row ^= g.adj[v]
        rows.append(row)
    kernel = kernel_basis(GF2Matrix.from_rows(rows, g.n))
    LOG.debug(f"L n F^ has dimension {len(kernel)} for F = {f}")

    members = []
    for selection in range(1 << len(kernel)):
        subset = 0
        for i in iter_bits(selection):
            subset ^= kernel[i]
        members.append(a.restrict(subset) + b.restrict(neighborhood_set(g, subset)))
    return members


def has_no_z(vector: KVector) -> bool:
    return not vector.positions_of(KleinElement.Z)


def restriction_criterion(g: SimpleGraph, f: KVector, vertices: VertexSet) -> bool:
    """
    The canonical L_P lies in F^ exactly when P is inside F_x, G|F_x restricted to P is even, and
    N(P) is inside F_y.
    """
    mask = g.as_mask(vertices)
    f_x = f.positions_of(KleinElement.X)
    f_y = f.positions_of(KleinElement.Y)
    if mask & ~f_x:
        return False
    kept = list(iter_bits(f_x))
    inside = sum(1 << kept.index(v) for v in iter_bits(mask))
    if not is_even_subgraph(induced_subgraph(g, f_x), inside):
        return False
    return not (neighborhood_set(g, mask) & ~f_y)
