# Copyright (C) 2021 ISIS Rutherford Appleton Laboratory UKRI
# SPDX - License - Identifier: GPL-3.0-or-later
"""
Cross-method identities, checked over every small graph and a seeded batch of random instances.

Each check returns the number of cases it looked at and a description of the first failure, or an
empty string if every case agreed.
"""
from dataclasses import dataclass
from logging import getLogger
from typing import Callable, List, Optional, Tuple

import numpy as np

from interlacepoly.core.eulerian import (EulerianDigraph, all_euler_circuits, circle_graph_of, circuit_partition_poly,
                                         random_eulerian_digraph, verify_circuit_partition_identity)
from interlacepoly.core.graph import (is_even_subgraph, local_complement, pivot, pivot_via_local_complements,
                                      swap_labels)
from interlacepoly.core.graph.generators import all_graphs, all_looped_graphs, complete, edgeless, path, random_graph
from interlacepoly.core.interlace import (q2_closed, q2_reduction, qn_avdh, qn_bouchet, qn_closed, qn_from_q2,
                                          qn_recursive, recursion_edge_independence)
from interlacepoly.core.isotropic import (KleinElement, KVector, dim_intersection, dim_via_rank_formula,
                                          graphic_system, has_no_z, in_f_hat, is_isotropic, restriction_criterion,
                                          tutte_martin_canonical, vector_LP)
from interlacepoly.core.poly import UniPoly
from interlacepoly.core.utility import ExecutionTimer
from interlacepoly.core.utility.progress_reporting import Progress

LOG = getLogger(__name__)

Outcome = Tuple[int, str]

# per identity, the largest n that is checked exhaustively
AGREEMENT_MAX_N = 6
SPECIALIZATION_MAX_N = 5
REDUCTION_MAX_N = 4
DIMENSION_MAX_N = 5
EVEN_SUBGRAPH_MAX_N = 5
MEMBERSHIP_MAX_N = 4
EDGE_CHOICE_MAX_N = 5
ALL_CIRCUITS_MAX_N = 4
GOLDEN_EDGELESS_MAX_N = 8

RANDOM_REDUCTION_CASES = 200
RANDOM_REDUCTION_MAX_N = 7
RANDOM_DIMENSION_CASES = 1000
RANDOM_DIMENSION_MAX_N = 10
RANDOM_DIGRAPH_CASES = 100
RANDOM_DIGRAPH_MAX_N = 5

# digraph, its circuit partition polynomial and the circle graph of its Euler circuit
HAND_WORKED_DIGRAPHS = (
    (EulerianDigraph(1, ((0, 0), (0, 0))), UniPoly('x', (0, 1, 1)), complete(1)),
    (EulerianDigraph(2, ((0, 1), (1, 0), (0, 1), (1, 0))), UniPoly('x', (0, 2, 2)), complete(2)),
)


@dataclass
class CheckResult:
    name: str
    anchor: str
    passed: bool
    cases: int
    detail: str = ''
    seconds: float = 0.0

    def line(self) -> str:
        status = 'PASS' if self.passed else 'FAIL'
        text = f"{status} {self.anchor} {self.name} ({self.cases} cases, {self.seconds:.2f}s)"
        return text if self.passed else f"{text}: {self.detail}"


def _x_bar(n: int) -> KVector:
    return KVector.complete(n, KleinElement.X)


def _y_bar(n: int) -> KVector:
    return KVector.complete(n, KleinElement.Y)


def _xy_vectors(n: int):
    for bits in range(1 << n):
        yield KVector.from_elements(KleinElement.Y if (bits >> v) & 1 else KleinElement.X for v in range(n))


def _graphs_up_to(max_n: int):
    for n in range(max_n + 1):
        yield from all_graphs(n)


def check_five_methods(max_n: int, seed: int) -> Outcome:
    cases = 0
    for g in _graphs_up_to(min(max_n, AGREEMENT_MAX_N)):
        expected = qn_closed(g)
        for method in (qn_recursive, qn_bouchet, qn_avdh, tutte_martin_canonical):
            result = method(g)
            if result != expected:
                return cases, f"{method.__name__} gives {result} on {g!r}, closed form gives {expected}"
        cases += 1
    return cases, ''


def check_golden_values(max_n: int, seed: int) -> Outcome:
    golden = [(edgeless(n), UniPoly.monomial(n)) for n in range(GOLDEN_EDGELESS_MAX_N + 1)]
    golden += [(complete(2), UniPoly('x', (0, 2))), (path(3), UniPoly('x', (0, 2, 1))),
               (complete(3), UniPoly('x', (0, 4)))]
    for i, (g, expected) in enumerate(golden):
        for result in (qn_closed(g), qn_recursive(g)):
            if result != expected:
                return i, f"{g!r} gives {result}, expected {expected}"
    return len(golden), ''


def check_specialization(max_n: int, seed: int) -> Outcome:
    cases = 0
    for g in _graphs_up_to(min(max_n, SPECIALIZATION_MAX_N)):
        if qn_from_q2(g) != qn_closed(g):
            return cases, f"q(G;2,y) differs from q_N on {g!r}"
        cases += 1
    return cases, ''


def check_two_variable_reduction(max_n: int, seed: int) -> Outcome:
    cases = 0
    for n in range(min(max_n, REDUCTION_MAX_N) + 1):
        for g in all_looped_graphs(n):
            if q2_reduction(g) != q2_closed(g):
                return cases, f"reduction differs from the subset sum on {g!r} with loops {g.loop_mask():b}"
            cases += 1
    rng = np.random.default_rng(seed)
    for i in range(RANDOM_REDUCTION_CASES):
        g = random_graph(int(rng.integers(0, RANDOM_REDUCTION_MAX_N + 1)), seed + i, loop_probability=0.3)
        if q2_reduction(g) != q2_closed(g):
            return cases, f"reduction differs from the subset sum on {g!r} with loops {g.loop_mask():b}"
        cases += 1
    return cases, ''


def check_intersection_dimension(max_n: int, seed: int) -> Outcome:
    cases = 0
    for g in _graphs_up_to(min(max_n, DIMENSION_MAX_N)):
        system = graphic_system(g, _x_bar(g.n), _y_bar(g.n))
        for f in _xy_vectors(g.n):
            if dim_intersection(system, f) != dim_via_rank_formula(g, f):
                return cases, f"F = {f} on {g!r}"
            cases += 1
    rng = np.random.default_rng(seed)
    for i in range(RANDOM_DIMENSION_CASES):
        n = int(rng.integers(1, RANDOM_DIMENSION_MAX_N + 1))
        g = random_graph(n, seed + i)
        f = KVector.from_elements(KleinElement.Y if bit else KleinElement.X for bit in rng.integers(0, 2, n))
        if dim_intersection(graphic_system(g, _x_bar(n), _y_bar(n)), f) != dim_via_rank_formula(g, f):
            return cases, f"F = {f} on {g!r}"
        cases += 1
    return cases, ''


def check_even_subgraph_criteria(max_n: int, seed: int) -> Outcome:
    cases = 0
    for g in _graphs_up_to(min(max_n, EVEN_SUBGRAPH_MAX_N)):
        for subset in range(1 << g.n):
            if has_no_z(vector_LP(g, _x_bar(g.n), _y_bar(g.n), subset)) != is_even_subgraph(g, subset):
                return cases, f"P = {subset:b} on {g!r}"
            cases += 1
    for g in _graphs_up_to(min(max_n, MEMBERSHIP_MAX_N)):
        for f in _xy_vectors(g.n):
            for subset in range(1 << g.n):
                member = in_f_hat(vector_LP(g, _x_bar(g.n), _y_bar(g.n), subset), f)
                if member != restriction_criterion(g, f, subset):
                    return cases, f"F = {f}, P = {subset:b} on {g!r}"
                cases += 1
    return cases, ''


def check_circuit_partition_identity(max_n: int, seed: int) -> Outcome:
    cases = 0
    for d, f, h in HAND_WORKED_DIGRAPHS:
        if circuit_partition_poly(d) != f or circle_graph_of(d) != h or not verify_circuit_partition_identity(d):
            return cases, f"hand-worked digraph {d.edges}"
        cases += 1
    for i in range(RANDOM_DIGRAPH_CASES):
        n = 1 + i % min(max(max_n, 1), RANDOM_DIGRAPH_MAX_N)
        d = random_eulerian_digraph(n, seed + i)
        if not verify_circuit_partition_identity(d):
            return cases, f"deterministic circuit of {d.edges}"
        cases += 1
        if n <= ALL_CIRCUITS_MAX_N:
            for visits in all_euler_circuits(d):
                if not verify_circuit_partition_identity(d, visits):
                    return cases, f"circuit {visits} of {d.edges}"
                cases += 1
    return cases, ''


def check_structural_identities(max_n: int, seed: int) -> Outcome:
    cases = 0
    for g in _graphs_up_to(min(max_n, AGREEMENT_MAX_N)):
        for v, w in g.edges():
            p = pivot(g, v, w)
            if swap_labels(pivot_via_local_complements(g, v, w), v, w) != p or pivot(p, v, w) != g:
                return cases, f"pivot on ({v}, {w}) of {g!r}"
            cases += 1
        for v in range(g.n):
            if local_complement(local_complement(g, v), v) != g:
                return cases, f"local complement at {v} of {g!r}"
            cases += 1
    for g in _graphs_up_to(min(max_n, EDGE_CHOICE_MAX_N)):
        if len(recursion_edge_independence(g)) > 1:
            return cases, f"first edge choice changes q_N of {g!r}"
        cases += 1
    return cases, ''


def check_isotropy(max_n: int, seed: int) -> Outcome:
    cases = 0
    for g in _graphs_up_to(min(max_n, AGREEMENT_MAX_N)):
        system = graphic_system(g, _x_bar(g.n), _y_bar(g.n))
        if not is_isotropic(system.basis, g.n):
            return cases, f"{g!r}"
        cases += 1
    return cases, ''


CHECKS: List[Tuple[str, str, Callable[[int, int], Outcome]]] = [
    ("five methods agree", "q_N:five-way", check_five_methods),
    ("golden values", "q_N(E_n)=x^n", check_golden_values),
    ("two-variable specialization", "q_N(G;y)=q(G;2,y)", check_specialization),
    ("two-variable reduction", "q:reduction=subset-sum", check_two_variable_reduction),
    ("intersection dimension", "dim(L^F)=|F_x|-r(G|F_x)", check_intersection_dimension),
    ("even subgraph criteria", "L_P:no-z<=>even", check_even_subgraph_criteria),
    ("circuit partition identity", "f(G;x)=x*q_N(H;x+1)", check_circuit_partition_identity),
    ("structural identities", "G^vw=G*v*w*v", check_structural_identities),
    ("isotropy", "dim(L)=n,<L,L>=0", check_isotropy),
]


def run_check(name: str, anchor: str, check: Callable[[int, int], Outcome], max_n: int, seed: int) -> CheckResult:
    with ExecutionTimer(msg=name) as timer:
        cases, failure = check(max_n, seed)
    result = CheckResult(name, anchor, not failure, cases, failure, timer.total_seconds or 0.0)
    if result.passed:
        LOG.info(str(timer))
    else:
        LOG.error(f"{name} failed: {failure}")
    return result


def run_suite(max_n: int = 5, seed: int = 0, progress: Optional[Progress] = None) -> List[CheckResult]:
    """
    Runs every check, exhaustive up to max_n vertices or the check's own limit if that is smaller.
    """
    if max_n < 0:
        raise ValueError(f"max_n must be non-negative, got {max_n}")
    progress = Progress.ensure_instance(progress, num_steps=len(CHECKS), task_name="Verification")
    results = []
    with progress:
        for name, anchor, check in CHECKS:
            results.append(run_check(name, anchor, check, max_n, seed))
            progress.update(1, name)
    return results


def format_report(results: List[CheckResult]) -> str:
    return ''.join(f"{r.line()}\n" for r in results)


def all_passed(results: List[CheckResult]) -> bool:
    return all(r.passed for r in results)
