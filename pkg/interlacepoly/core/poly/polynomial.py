# Copyright (C) 2021 ISIS Rutherford Appleton Laboratory UKRI
# SPDX - License - Identifier: GPL-3.0-or-later
"""
Exact integer polynomials in one and two variables.

Coefficients are Python ints, so nothing overflows however many subsets get summed.
"""
from dataclasses import dataclass
from math import comb
from typing import Any, Dict, Iterable, Mapping, Sequence, Tuple, Union

import numpy as np


def _trim(coeffs: Iterable[int]) -> Tuple[int, ...]:
    values = [int(c) for c in coeffs]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


def _term(coefficient: int, monomial: str, first: bool) -> str:
    sign = '-' if coefficient < 0 else '+'
    magnitude = abs(coefficient)
    if not monomial:
        body = str(magnitude)
    elif magnitude == 1:
        body = monomial
    else:
        body = f"{magnitude}*{monomial}"

    if first:
        return f"-{body}" if sign == '-' else body
    return f" {sign} {body}"


def _power(var: str, exponent: int) -> str:
    if exponent == 0:
        return ''
    if exponent == 1:
        return var
    return f"{var}^{exponent}"


def shifted_power_coefficients(k: int, shift: int) -> Tuple[int, ...]:
    """
    Coefficients of (x + shift)^k, lowest degree first.
    """
    return tuple(comb(k, j) * shift**(k - j) for j in range(k + 1))


@dataclass(frozen=True)
class UniPoly:
    var: str = 'x'
    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'coeffs', _trim(self.coeffs))

    @staticmethod
    def zero(var: str = 'x') -> 'UniPoly':
        return UniPoly(var)

    @staticmethod
    def constant(c: int, var: str = 'x') -> 'UniPoly':
        return UniPoly(var, (c, ))

    @staticmethod
    def monomial(k: int, c: int = 1, var: str = 'x') -> 'UniPoly':
        return UniPoly(var, (0, ) * k + (c, ))

    @staticmethod
    def from_exponent_histogram(histogram: Sequence[int], shift: int, var: str = 'x') -> 'UniPoly':
        """
        Sum over k of histogram[k] * (x + shift)^k.
        """
        result = [0] * len(histogram)
        for k, count in enumerate(histogram):
            count = int(count)
            if not count:
                continue
            for j, c in enumerate(shifted_power_coefficients(k, shift)):
                result[j] += count * c
        return UniPoly(var, tuple(result))

    @property
    def degree(self) -> int:
        """
        Degree of the polynomial, -1 for the zero polynomial.
        """
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def _check_var(self, other: 'UniPoly'):
        if self.var != other.var:
            raise ValueError(f"Variable mismatch: '{self.var}' and '{other.var}'")

    def __add__(self, other: 'UniPoly') -> 'UniPoly':
        self._check_var(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self.var, tuple(self.coefficient(k) + other.coefficient(k) for k in range(size)))

    def __neg__(self) -> 'UniPoly':
        return UniPoly(self.var, tuple(-c for c in self.coeffs))

    def __sub__(self, other: 'UniPoly') -> 'UniPoly':
        return self + (-other)

    def __mul__(self, other: 'UniPoly') -> 'UniPoly':
        self._check_var(other)
        if self.is_zero() or other.is_zero():
            return UniPoly(self.var)
        result = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    result[i + j] += a * b
        return UniPoly(self.var, tuple(result))

    def scale(self, c: int) -> 'UniPoly':
        return UniPoly(self.var, tuple(c * a for a in self.coeffs))

    def power(self, k: int) -> 'UniPoly':
        if k < 0:
            raise ValueError(f"Negative power {k}")
        result = UniPoly.constant(1, self.var)
        for _ in range(k):
            result = result * self
        return result

    def evaluate(self, x0: int) -> int:
        value = 0
        for c in reversed(self.coeffs):
            value = value * x0 + c
        return value

    def rename(self, var: str) -> 'UniPoly':
        return UniPoly(var, self.coeffs)

    def to_json(self) -> Dict[str, Any]:
        return {"var": self.var, "coeffs": list(self.coeffs)}

    @staticmethod
    def from_json(data: Mapping[str, Any]) -> 'UniPoly':
        return UniPoly(data["var"], tuple(data["coeffs"]))

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c:
                parts.append(_term(c, _power(self.var, k), not parts))
        return ''.join(parts)


@dataclass(frozen=True)
class BiPoly:
    vars: Tuple[str, str] = ('x', 'y')
    terms: Mapping[Tuple[int, int], int] = None  # type: ignore

    def __post_init__(self):
        cleaned = {(int(i), int(j)): int(c) for (i, j), c in (self.terms or {}).items() if c}
        object.__setattr__(self, 'terms', cleaned)
        object.__setattr__(self, 'vars', tuple(self.vars))

    @staticmethod
    def from_uni(p: UniPoly, vars: Tuple[str, str] = ('x', 'y'), position: int = 0) -> 'BiPoly':
        if p.var != vars[position]:
            raise ValueError(f"Variable '{p.var}' is not '{vars[position]}'")
        return BiPoly(vars, {((k, 0) if position == 0 else (0, k)): c for k, c in enumerate(p.coeffs)})

    @staticmethod
    def from_exponent_histogram(histogram: np.ndarray, shift_x: int, shift_y: int,
                                vars: Tuple[str, str] = ('x', 'y')) -> 'BiPoly':
        """
        Sum over (r, k) of histogram[r, k] * (x + shift_x)^r * (y + shift_y)^k.
        """
        terms: Dict[Tuple[int, int], int] = {}
        for r, k in zip(*np.nonzero(histogram)):
            count = int(histogram[r, k])
            xs = shifted_power_coefficients(int(r), shift_x)
            ys = shifted_power_coefficients(int(k), shift_y)
            for i, a in enumerate(xs):
                for j, b in enumerate(ys):
                    terms[(i, j)] = terms.get((i, j), 0) + count * a * b
        return BiPoly(vars, terms)

    def coefficient(self, i: int, j: int) -> int:
        return self.terms.get((i, j), 0)

    def is_zero(self) -> bool:
        return not self.terms

    def _check_vars(self, other: 'BiPoly'):
        if self.vars != other.vars:
            raise ValueError(f"Variable mismatch: {self.vars} and {other.vars}")

    def __add__(self, other: 'BiPoly') -> 'BiPoly':
        self._check_vars(other)
        terms = dict(self.terms)
        for key, c in other.terms.items():
            terms[key] = terms.get(key, 0) + c
        return BiPoly(self.vars, terms)

    def __neg__(self) -> 'BiPoly':
        return BiPoly(self.vars, {key: -c for key, c in self.terms.items()})

    def __sub__(self, other: 'BiPoly') -> 'BiPoly':
        return self + (-other)

    def __mul__(self, other: 'BiPoly') -> 'BiPoly':
        self._check_vars(other)
        terms: Dict[Tuple[int, int], int] = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in other.terms.items():
                key = (i1 + i2, j1 + j2)
                terms[key] = terms.get(key, 0) + a * b
        return BiPoly(self.vars, terms)

    def scale(self, c: int) -> 'BiPoly':
        return BiPoly(self.vars, {key: c * a for key, a in self.terms.items()})

    def evaluate(self, x0: int, y0: int) -> int:
        return sum(c * x0**i * y0**j for (i, j), c in self.terms.items())

    def eval_at(self, x0: int) -> UniPoly:
        """
        Fixes the first variable at x0, leaving a polynomial in the second.
        """
        degree = max((j for _, j in self.terms), default=-1)
        coeffs = [0] * (degree + 1)
        for (i, j), c in self.terms.items():
            coeffs[j] += c * x0**i
        return UniPoly(self.vars[1], tuple(coeffs))

    def to_json(self) -> Dict[str, Any]:
        return {"vars": list(self.vars), "terms": [[i, j, self.terms[(i, j)]] for i, j in sorted(self.terms)]}

    @staticmethod
    def from_json(data: Mapping[str, Any]) -> 'BiPoly':
        return BiPoly(tuple(data["vars"]), {(i, j): c for i, j, c in data["terms"]})

    def __eq__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, tuple(sorted(self.terms.items()))))

    def __str__(self):
        if self.is_zero():
            return "0"
        x, y = self.vars
        parts = []
        for i, j in sorted(self.terms, reverse=True):
            monomial = '*'.join(p for p in (_power(x, i), _power(y, j)) if p)
            parts.append(_term(self.terms[(i, j)], monomial, not parts))
        return ''.join(parts)


Poly = Union[UniPoly, BiPoly]


def add(p: Poly, q: Poly) -> Poly:
    return p + q  # type: ignore


def mul(p: Poly, q: Poly) -> Poly:
    return p * q  # type: ignore


def scale(p: Poly, c: int) -> Poly:
    return p.scale(c)


def add_shifted_power(p: UniPoly, k: int, base_shift: int, multiplicity: int = 1) -> UniPoly:
    """
    Returns p + multiplicity * (x + base_shift)^k.
    """
    if k < 0:
        raise ValueError(f"Exponent must be non-negative, got {k}")
    term = UniPoly(p.var, shifted_power_coefficients(k, base_shift)).scale(multiplicity)
    return p + term


def substitute(p: UniPoly, shift: int) -> UniPoly:
    """
    Returns p(x + shift), expanded.
    """
    return UniPoly.from_exponent_histogram(p.coeffs, shift, p.var)


def eval_at(p: BiPoly, x0: int) -> UniPoly:
    return p.eval_at(x0)


def divide_by_var(p: UniPoly) -> UniPoly:
    """
    Returns p / x. The constant term of p has to be zero for the division to be exact.
    """
    if p.coefficient(0) != 0:
        raise ValueError(f"Cannot divide {p} by {p.var}: constant term is {p.coefficient(0)}")
    return UniPoly(p.var, p.coeffs[1:])
