# Copyright (C) 2021 ISIS Rutherford Appleton Laboratory UKRI
# SPDX - License - Identifier: GPL-3.0-or-later
"""
Worker kernels for the 2^n subset sums.

Each kernel handles one chunk of the subsets, the chunk index giving the high-order bits, and
returns a histogram of (rank, nullity) pairs. Polynomials are only built once the histograms of
all chunks have been added up.
"""
from functools import partial
from typing import Optional, Sequence

import numpy as np

from interlacepoly.core.gf2 import rank_of_rows
from interlacepoly.core.parallel.utility import summed_chunk_histograms
from interlacepoly.core.utility.progress_reporting import Progress


def induced_rank_histogram_chunk(adj: Sequence[int], n: int, chunk: int, chunk_bits: int) -> np.ndarray:
    """
    hist[r, k] counts the subsets W of this chunk whose induced adjacency matrix has rank r and nullity k.

    The rank of G[W] is the rank of the rows adj[v] & W for v in W, so no matrix is extracted.
    Subsets are visited in Gray code order, which changes W by one vertex per step and lets the
    masked rows be updated in place.
    """
    low_bits = n - chunk_bits
    subset = chunk << low_bits
    size = bin(subset).count("1")
    masked = [row & subset for row in adj]
    hist = np.zeros((n + 1, n + 1), dtype=np.int64)

    for i in range(1 << low_bits):
        if i:
            bit = i & -i
            u = bit.bit_length() - 1
            subset ^= bit
            size += 1 if subset & bit else -1
            row = adj[u]
            while row:
                low = row & -row
                masked[low.bit_length() - 1] ^= bit
                row ^= low

        rows = []
        remaining = subset
        while remaining:
            low = remaining & -remaining
            rows.append(masked[low.bit_length() - 1])
            remaining ^= low
        r = rank_of_rows(rows)
        hist[r, size - r] += 1

    return hist


def admissible_corank_histogram_chunk(extended_rows: Sequence[int], n: int, chunk: int,
                                      chunk_bits: int) -> np.ndarray:
    """
    hist[k] counts the admissible column sets S of this chunk for which L_S has corank k.

    extended_rows are the rows of the n x 2n matrix [A | I]. Bit i of S set selects column i of the
    adjacency half, clear selects column i of the identity half.
    """
    low_bits = n - chunk_bits
    base = chunk << low_bits
    hist = np.zeros(n + 1, dtype=np.int64)
    for low in range(1 << low_bits):
        selection = base | low
        rows = [(r & selection) | ((r >> n) & ~selection) for r in extended_rows]
        hist[n - rank_of_rows(rows)] += 1
    return hist


def induced_rank_histogram(adj: Sequence[int], n: int, progress: Optional[Progress] = None,
                           msg: str = "Subset ranks") -> np.ndarray:
    return summed_chunk_histograms(partial(induced_rank_histogram_chunk, tuple(adj), n), n, progress, msg)


def admissible_corank_histogram(extended_rows: Sequence[int], n: int, progress: Optional[Progress] = None,
                                msg: str = "Admissible column sets") -> np.ndarray:
    kernel = partial(admissible_corank_histogram_chunk, tuple(extended_rows), n)
    return summed_chunk_histograms(kernel, n, progress, msg)
