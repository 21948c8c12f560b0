# Copyright (C) 2021 ISIS Rutherford Appleton Laboratory UKRI
# SPDX - License - Identifier: GPL-3.0-or-later
"""
Containers for run settings. They don't do much apart from storing the values
and checking that they are within the limits the computations support.
"""
from dataclasses import dataclass
from typing import Optional

# a vertex set has to fit into one machine word
STRUCTURAL_MAX_N = 63
# 2^n subset sums
CLOSED_FORM_MAX_N = 24
# 2^n rank computations on 2n x 2n matrices
ISOTROPIC_MAX_N = 20
# backtracking over every Euler circuit
EULER_CIRCUITS_MAX_N = 4

OUTPUT_FORMATS = ('text', 'json')


def check_size(n: int, cap: int, what: str):
    if n > cap:
        raise ValueError(f"{what} supports at most {cap} vertices, got {n}")


@dataclass
class RunConfig:
    subcommand: str
    input_path: Optional[str] = None
    method: Optional[str] = None
    output_format: str = 'text'
    seed: int = 0
    max_n: int = 5

    def __post_init__(self):
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(f"Unknown output format '{self.output_format}', expected one of {OUTPUT_FORMATS}")
        if not 0 <= self.max_n <= STRUCTURAL_MAX_N:
            raise ValueError(f"max_n must be between 0 and {STRUCTURAL_MAX_N}, got {self.max_n}")

    def to_dict(self) -> dict:
        return {
            'subcommand': self.subcommand,
            'input_path': self.input_path,
            'method': self.method,
            'output_format': self.output_format,
            'seed': self.seed,
            'max_n': self.max_n,
        }
