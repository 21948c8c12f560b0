# Copyright (C) 2021 ISIS Rutherford Appleton Laboratory UKRI
# SPDX - License - Identifier: GPL-3.0-or-later
"""
Dense bit-packed matrices over GF(2).

Rows are stored as numpy uint64 words, row-major. For the elimination itself every row is
converted to a Python int, which gives word-parallel XOR on rows of any width and keeps the
inner loop of the subset sums free of numpy call overhead.
"""
from logging import getLogger
from typing import Dict, Iterable, List, Optional, Sequence

import numpy as np

LOG = getLogger(__name__)

WORD_BITS = 64
WORD_MASK = (1 << WORD_BITS) - 1


def words_per_row(cols: int) -> int:
    return (cols + WORD_BITS - 1) // WORD_BITS


def rank_of_rows(rows: Iterable[int], pivots: Optional[Dict[int, int]] = None) -> int:
    """
    Rank over GF(2) of the rows given as int bitmasks (bit j is column j).

    The pivot of a row is its first nonzero column, rows are consumed top-down.

    :param rows: The rows to eliminate
    :param pivots: Optional already-reduced pivot table (lowest bit -> row). It is copied, not modified.
    :return: The rank of the pivot rows plus the given rows
    """
    table = dict(pivots) if pivots else {}
    _reduce_into(table, rows)
    return len(table)


def pivot_table(rows: Iterable[int]) -> Dict[int, int]:
    """
    Reduces the rows once so that later calls to rank_of_rows can start from the result.
    """
    table: Dict[int, int] = {}
    _reduce_into(table, rows)
    return table


def _reduce_into(table: Dict[int, int], rows: Iterable[int]) -> None:
    for row in rows:
        while row:
            low = row & -row
            pivot_row = table.get(low)
            if pivot_row is None:
                table[low] = row
                break
            row ^= pivot_row


class GF2Matrix:
    """
    Immutable rows x cols matrix over the two-element field.
    """
    __slots__ = ('rows', 'cols', 'data')

    def __init__(self, rows: int, cols: int, data: Optional[np.ndarray] = None):
        if rows < 0 or cols < 0:
            raise ValueError(f"Matrix dimensions must be non-negative, got {rows}x{cols}")

        width = words_per_row(cols)
        if data is None:
            data = np.zeros((rows, width), dtype=np.uint64)
        else:
            data = np.array(data, dtype=np.uint64, copy=True).reshape(rows, width)

        spare = width * WORD_BITS - cols
        if rows and width and spare:
            overflow = data[:, -1] >> np.uint64(WORD_BITS - spare)
            if np.any(overflow):
                raise ValueError(f"Bits set beyond column {cols} in the last word")

        data.flags.writeable = False
        self.rows = rows
        self.cols = cols
        self.data = data

    @staticmethod
    def from_rows(rows: Sequence[int], cols: int) -> 'GF2Matrix':
        """
        Builds a matrix from int bitmasks, bit j of a row being column j.
        """
        width = words_per_row(cols)
        data = np.zeros((len(rows), width), dtype=np.uint64)
        for i, row in enumerate(rows):
            if row < 0 or row >> cols:
                raise ValueError(f"Row {i} has bits outside of {cols} columns")
            for k in range(width):
                data[i, k] = (row >> (k * WORD_BITS)) & WORD_MASK
        return GF2Matrix(len(rows), cols, data)

    @staticmethod
    def from_dense(array) -> 'GF2Matrix':
        """
        Builds a matrix from a 2D array of integers, reduced mod 2.
        """
        dense = np.asarray(array, dtype=np.int64)
        if dense.ndim != 2:
            raise ValueError(f"Expected a 2D array, got shape {dense.shape}")
        rows, cols = dense.shape
        bits = (dense % 2).astype(np.uint8)
        row_ints = [sum(1 << int(j) for j in np.flatnonzero(bits[i])) for i in range(rows)]
        return GF2Matrix.from_rows(row_ints, cols)

    @staticmethod
    def identity(n: int) -> 'GF2Matrix':
        return GF2Matrix.from_rows([1 << i for i in range(n)], n)

    def row_ints(self) -> List[int]:
        result = []
        for i in range(self.rows):
            value = 0
            for k, word in enumerate(self.data[i]):
                value |= int(word) << (k * WORD_BITS)
            result.append(value)
        return result

    def to_dense(self) -> np.ndarray:
        dense = np.zeros((self.rows, self.cols), dtype=np.uint8)
        for i, row in enumerate(self.row_ints()):
            for j in range(self.cols):
                dense[i, j] = (row >> j) & 1
        return dense

    def hstack(self, other: 'GF2Matrix') -> 'GF2Matrix':
        if self.rows != other.rows:
            raise ValueError(f"Row count mismatch: {self.rows} != {other.rows}")
        return GF2Matrix.from_rows([a | (b << self.cols) for a, b in zip(self.row_ints(), other.row_ints())],
                                   self.cols + other.cols)

    def select_columns(self, columns: Sequence[int]) -> 'GF2Matrix':
        """
        Submatrix made of the given columns, in the given order.
        """
        rows = []
        for row in self.row_ints():
            rows.append(sum(((row >> c) & 1) << j for j, c in enumerate(columns)))
        return GF2Matrix.from_rows(rows, len(columns))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other):
        if not isinstance(other, GF2Matrix):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and np.array_equal(self.data, other.data)

    def __hash__(self):
        return hash((self.rows, self.cols, self.data.tobytes()))

    def __repr__(self):
        return f"GF2Matrix({self.rows}x{self.cols}, {self.to_dense().tolist()})"


def rank(m: GF2Matrix) -> int:
    return rank_of_rows(m.row_ints())


def nullity(m: GF2Matrix) -> int:
    return m.cols - rank(m)


def corank(m: GF2Matrix) -> int:
    if not m.is_square:
        raise ValueError(f"Corank requires a square matrix, got {m.rows}x{m.cols}")
    return m.cols - rank(m)


def stack_rank(a: GF2Matrix, b: GF2Matrix) -> int:
    """
    Rank of the matrix made by placing the rows of b under the rows of a.
    """
    if a.cols != b.cols:
        raise ValueError(f"Column count mismatch: {a.cols} != {b.cols}")
    return rank_of_rows(a.row_ints() + b.row_ints())


def row_space_contains(m: GF2Matrix, vector: int) -> bool:
    table = pivot_table(m.row_ints())
    return rank_of_rows([vector], table) == len(table)


def kernel_basis(m: GF2Matrix) -> List[int]:
    """
    Basis of {v : m.v = 0}, each vector an int bitmask over the columns.

    The number of vectors returned is nullity(m).
    """
    reduced: List[int] = []
    pivot_cols: List[int] = []
    for row in m.row_ints():
        for pivot_col, pivot_row in zip(pivot_cols, reduced):
            if (row >> pivot_col) & 1:
                row ^= pivot_row
        if not row:
            continue
        col = (row & -row).bit_length() - 1
        # keep the echelon form fully reduced
        reduced = [r ^ row if (r >> col) & 1 else r for r in reduced]
        reduced.append(row)
        pivot_cols.append(col)

    pivot_set = set(pivot_cols)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        vector = 1 << free
        for pivot_col, pivot_row in zip(pivot_cols, reduced):
            if (pivot_row >> free) & 1:
                vector |= 1 << pivot_col
        basis.append(vector)

    LOG.debug(f"Kernel of {m.rows}x{m.cols} matrix has dimension {len(basis)}")
    return basis
