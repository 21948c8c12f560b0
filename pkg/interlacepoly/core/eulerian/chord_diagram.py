# Copyright (C) 2021 ISIS Rutherford Appleton Laboratory UKRI
# SPDX - License - Identifier: GPL-3.0-or-later
"""
Chord diagrams as double occurrence words, and the circle graph of their interlaced chords.
"""
from collections import Counter
from dataclasses import dataclass
from logging import getLogger
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

from interlacepoly.core.eulerian.circuits import euler_circuit
from interlacepoly.core.eulerian.digraph import EulerianDigraph
from interlacepoly.core.eulerian.states import circuit_partition_poly
from interlacepoly.core.gf2 import GF2Matrix
from interlacepoly.core.graph import SimpleGraph, popcount
from interlacepoly.core.interlace import qn_closed
from interlacepoly.core.poly import UniPoly, substitute

LOG = getLogger(__name__)


@dataclass(frozen=True)
class ChordDiagram:
    word: Tuple[Hashable, ...]

    def __post_init__(self):
        word = tuple(self.word)
        counts = Counter(word)
        wrong = [s for s, c in counts.items() if c != 2]
        if wrong:
            raise ValueError(f"Not a double occurrence word: '{wrong[0]}' occurs {counts[wrong[0]]} time(s)")
        object.__setattr__(self, 'word', word)

    def symbols(self) -> List[Hashable]:
        """
        The symbols in sorted order, symbol i becoming vertex i of the circle graph.
        """
        return sorted(set(self.word))

    def positions(self) -> Dict[Hashable, Tuple[int, int]]:
        found: Dict[Hashable, List[int]] = {}
        for i, s in enumerate(self.word):
            found.setdefault(s, []).append(i)
        return {s: (p[0], p[1]) for s, p in found.items()}

    def __str__(self):
        return ' '.join(str(s) for s in self.word)


def chord_diagram_from_circuit(visits: Sequence[Hashable]) -> ChordDiagram:
    return ChordDiagram(tuple(visits))


def is_interlaced(cd: ChordDiagram, a: Hashable, b: Hashable) -> bool:
    """
    True iff exactly one occurrence of b lies between the two occurrences of a.
    """
    positions = cd.positions()
    if a not in positions or b not in positions:
        raise ValueError(f"Symbols '{a}' and '{b}' must both occur in the word")
    first, second = positions[a]
    return sum(first < p < second for p in positions[b]) == 1


def _interlace_rows(cd: ChordDiagram) -> List[int]:
    symbols = cd.symbols()
    positions = cd.positions()
    occurrences = {s: (1 << positions[s][0]) | (1 << positions[s][1]) for s in symbols}
    rows = []
    for a in symbols:
        first, second = positions[a]
        between = ((1 << second) - 1) & ~((1 << (first + 1)) - 1)
        row = 0
        for j, b in enumerate(symbols):
            if popcount(between & occurrences[b]) == 1:
                row |= 1 << j
        rows.append(row)
    return rows


def interlace_matrix(cd: ChordDiagram) -> GF2Matrix:
    rows = _interlace_rows(cd)
    return GF2Matrix.from_rows(rows, len(rows))


def circle_graph(cd: ChordDiagram) -> SimpleGraph:
    """
    Vertices are the chords, adjacent when the chords cross.
    """
    rows = _interlace_rows(cd)
    return SimpleGraph(len(rows), rows)


def circle_graph_of(d: EulerianDigraph, visits: Optional[Iterable[int]] = None) -> SimpleGraph:
    """
    Circle graph of the chord diagram given by an Euler circuit, the deterministic one by default.
    """
    visits = euler_circuit(d) if visits is None else tuple(visits)
    return circle_graph(chord_diagram_from_circuit(visits))


def interlace_side(h: SimpleGraph) -> UniPoly:
    """
    x q_N(H; x+1).
    """
    return UniPoly.monomial(1) * substitute(qn_closed(h), 1)


def verify_circuit_partition_identity(d: EulerianDigraph, visits: Optional[Iterable[int]] = None) -> bool:
    """
    Checks f(G;x) == x q_N(H;x+1) with H the circle graph of an Euler circuit of G.
    """
    f = circuit_partition_poly(d)
    h = circle_graph_of(d, visits)
    rhs = interlace_side(h)
    if f != rhs:
        LOG.warning(f"Circuit partition identity fails: f = {f}, x q_N(H; x+1) = {rhs}")
        return False
    return True
