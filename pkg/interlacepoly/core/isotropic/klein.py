# Copyright (C) 2021 ISIS Rutherford Appleton Laboratory UKRI
# SPDX - License - Identifier: GPL-3.0-or-later
"""
The Klein group K = {0, x, y, z} as pairs of bits, and vectors in K^V stored as two bit rows.
"""
from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable

from interlacepoly.core.graph.simple_graph import iter_bits, popcount


class KleinElement(IntEnum):
    """
    Bit 0 of the value is the first component, bit 1 the second.
    """
    ZERO = 0
    X = 1
    Y = 2
    Z = 3

    @property
    def b1(self) -> int:
        return self.value & 1

    @property
    def b2(self) -> int:
        return self.value >> 1

    def __add__(self, other):
        return KleinElement(self.value ^ int(other))

    def form(self, other: 'KleinElement') -> int:
        """
        1 iff the two elements differ and neither is zero.
        """
        return (self.b1 & other.b2) ^ (self.b2 & other.b1)

    @property
    def symbol(self) -> str:
        return SYMBOLS[self.value]


SYMBOLS = '0xyz'
NONZERO = (KleinElement.X, KleinElement.Y, KleinElement.Z)


@dataclass(frozen=True)
class KVector:
    n: int
    row1: int = 0
    row2: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"Length must be non-negative, got {self.n}")
        if self.row1 < 0 or self.row2 < 0 or (self.row1 | self.row2) >> self.n:
            raise ValueError(f"Rows have bits outside of {self.n} positions")

    @staticmethod
    def from_elements(elements: Iterable[int]) -> 'KVector':
        row1 = row2 = 0
        n = 0
        for v, e in enumerate(elements):
            e = KleinElement(e)
            row1 |= e.b1 << v
            row2 |= e.b2 << v
            n = v + 1
        return KVector(n, row1, row2)

    @staticmethod
    def from_word(word: str) -> 'KVector':
        """
        >>> KVector.from_word("xy0z").to_word()
        'xy0z'
        """
        bad = set(word) - set(SYMBOLS)
        if bad:
            raise ValueError(f"Invalid Klein symbols {sorted(bad)} in '{word}', expected only '{SYMBOLS}'")
        return KVector.from_elements(SYMBOLS.index(c) for c in word)

    @staticmethod
    def complete(n: int, element: int) -> 'KVector':
        """
        The vector taking the same value at every position.
        """
        element = KleinElement(element)
        mask = (1 << n) - 1
        return KVector(n, mask if element.b1 else 0, mask if element.b2 else 0)

    def __getitem__(self, v: int) -> KleinElement:
        if not 0 <= v < self.n:
            raise IndexError(f"Position {v} out of range for length {self.n}")
        return KleinElement(((self.row1 >> v) & 1) | (((self.row2 >> v) & 1) << 1))

    def __iter__(self):
        return (self[v] for v in range(self.n))

    def __len__(self):
        return self.n

    def _check_length(self, other: 'KVector'):
        if self.n != other.n:
            raise ValueError(f"Length mismatch: {self.n} != {other.n}")

    def __add__(self, other: 'KVector') -> 'KVector':
        self._check_length(other)
        return KVector(self.n, self.row1 ^ other.row1, self.row2 ^ other.row2)

    def restrict(self, mask: int) -> 'KVector':
        """
        X(P): keeps the positions in P and zeroes the rest.
        """
        return KVector(self.n, self.row1 & mask, self.row2 & mask)

    @property
    def support(self) -> int:
        return self.row1 | self.row2

    def is_zero(self) -> bool:
        return not self.support

    def nowhere_zero(self) -> bool:
        return self.support == (1 << self.n) - 1

    def positions_of(self, element: int) -> int:
        """
        Bit mask of the positions holding the element, e.g. F_x for element X.
        """
        element = KleinElement(element)
        full = (1 << self.n) - 1
        first = self.row1 if element.b1 else ~self.row1
        second = self.row2 if element.b2 else ~self.row2
        return first & second & full

    def flatten(self) -> int:
        """
        2n-bit row, position-major: bit 2v is the first component at v, bit 2v+1 the second.
        """
        result = 0
        for v in iter_bits(self.support):
            result |= self[v].value << (2 * v)
        return result

    def to_word(self) -> str:
        return ''.join(e.symbol for e in self)

    def __str__(self):
        return self.to_word()


def kv_form(a: KVector, b: KVector) -> int:
    """
    Sum over the positions of the pointwise Klein form, over GF(2).
    """
    if a.n != b.n:
        raise ValueError(f"Length mismatch: {a.n} != {b.n}")
    return popcount((a.row1 & b.row2) ^ (a.row2 & b.row1)) & 1
