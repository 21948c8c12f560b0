# Copyright (C) 2021 ISIS Rutherford Appleton Laboratory UKRI
# SPDX - License - Identifier: GPL-3.0-or-later
"""
The restricted Tutte-Martin polynomial m(S, C; x) = sum of (x-1)^dim(L n F^) over every F that
differs from C at every position.
"""
from functools import partial
from logging import getLogger
from typing import Dict, List, Optional, Tuple

import numpy as np

from interlacepoly.core.gf2 import rank_of_rows
from interlacepoly.core.graph import SimpleGraph
from interlacepoly.core.isotropic.klein import NONZERO, KleinElement, KVector
from interlacepoly.core.isotropic.system import IsotropicSystem, graphic_system
from interlacepoly.core.parallel.utility import summed_chunk_histograms
from interlacepoly.core.poly import UniPoly
from interlacepoly.core.utility.data_containers import ISOTROPIC_MAX_N, check_size
from interlacepoly.core.utility.progress_reporting import Progress

LOG = getLogger(__name__)


def allowed_values(c: KVector) -> List[Tuple[KleinElement, KleinElement]]:
    """
    For every position, the two nonzero elements other than C(v), smaller code first.
    """
    if not c.nowhere_zero():
        raise ValueError(f"C = {c} takes the value 0")
    return [tuple(e for e in NONZERO if e != c[v]) for v in range(c.n)]  # type: ignore


def choice_to_vector(choices: List[Tuple[KleinElement, KleinElement]], counter: int) -> KVector:
    """
    The F selected by the counter: bit v picks the second allowed value at v.
    """
    return KVector.from_elements(pair[(counter >> v) & 1] for v, pair in enumerate(choices))


def restricted_dimension_histogram_chunk(pivots: Dict[int, int], options: Tuple[Tuple[int, int], ...], n: int,
                                         chunk: int, chunk_bits: int) -> np.ndarray:
    """
    hist[d] counts the F of this chunk with dim(L n F^) = d.

    options[v] holds the flattened F^ basis row at v for both allowed values. Flattening is
    position-major, so an element e at position v is the row e << 2v. L is given by its reduced
    pivot table and only the F^ rows are eliminated for each F.
    """
    low_bits = n - chunk_bits
    base = chunk << low_bits
    hist = np.zeros(n + 1, dtype=np.int64)
    for low in range(1 << low_bits):
        counter = base | low
        rows = [options[v][(counter >> v) & 1] for v in range(n)]
        hist[2 * n - rank_of_rows(rows, pivots)] += 1
    return hist


def tutte_martin_restricted(system: IsotropicSystem, c: KVector, progress: Optional[Progress] = None) -> UniPoly:
    if c.n != system.n:
        raise ValueError(f"C has length {c.n}, the system has {system.n} positions")
    check_size(system.n, ISOTROPIC_MAX_N, "The restricted Tutte-Martin polynomial")
    choices = allowed_values(c)
    options = tuple((int(lo) << (2 * v), int(hi) << (2 * v)) for v, (lo, hi) in enumerate(choices))

    kernel = partial(restricted_dimension_histogram_chunk, system.pivots, options, system.n)
    hist = summed_chunk_histograms(kernel, system.n, progress, msg="Tutte-Martin sum")
    LOG.debug(f"Intersection dimension histogram: {hist.tolist()}")
    return UniPoly.from_exponent_histogram(hist, -1)


def tutte_martin_canonical(g: SimpleGraph, progress: Optional[Progress] = None) -> UniPoly:
    """
    m(S, z^; x) for the system presented by (G, x^, y^).
    """
    if g.has_loops():
        raise ValueError("The canonical presentation needs a graph without loops")
    check_size(g.n, ISOTROPIC_MAX_N, "The restricted Tutte-Martin polynomial")
    system = graphic_system(g, KVector.complete(g.n, KleinElement.X), KVector.complete(g.n, KleinElement.Y))
    return tutte_martin_restricted(system, KVector.complete(g.n, KleinElement.Z), progress)
