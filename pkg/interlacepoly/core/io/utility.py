# Copyright (C) 2021 ISIS Rutherford Appleton Laboratory UKRI
# SPDX - License - Identifier: GPL-3.0-or-later

import os
import sys
from logging import getLogger
from typing import List, Optional, TextIO, Tuple

LOG = getLogger(__name__)

STDIN_SOURCE = '-'
INLINE_LINE_SEPARATOR = ';'


def read_source(source: str, stdin: Optional[TextIO] = None) -> str:
    """
    Reads the text behind an input argument.

    '-' reads standard input, an existing path is read as a UTF-8 file and anything else is taken
    as the text itself, with ';' standing in for line breaks. A single token that names no
    file is taken for a mistyped path.

    >>> read_source("2 1;0 1")
    '2 1\\n0 1'
    """
    if source == STDIN_SOURCE:
        LOG.debug("Reading input from stdin")
        return (stdin if stdin is not None else sys.stdin).read()
    if os.path.isfile(source):
        LOG.debug(f"Reading input from file {source}")
        with open(source, encoding='utf-8') as f:
            return f.read()
    if source and not any(c.isspace() or c == INLINE_LINE_SEPARATOR for c in source):
        raise FileNotFoundError(f"No such input file: '{source}'")
    LOG.debug("Using the argument as inline input")
    return source.replace(INLINE_LINE_SEPARATOR, '\n')


def _to_int(token: str, line_number: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ValueError(f"Line {line_number}: expected an integer, got '{token}'")


def parse_header_and_pairs(text: str, what: str) -> Tuple[int, List[Tuple[int, int]]]:
    """
    Parses the shared "n m" header followed by m lines of "u v" with 0 <= u, v < n.

    Blank lines are ignored.

    >>> parse_header_and_pairs("3 2\\n0 1\\n1 2\\n", "graph")
    (3, [(0, 1), (1, 2)])
    """
    lines = [(i + 1, line.split()) for i, line in enumerate(text.splitlines()) if line.strip()]
    if not lines:
        raise ValueError(f"Empty {what} input")

    header_line, header = lines[0]
    if len(header) != 2:
        raise ValueError(f"Line {header_line}: {what} header must be 'n m', got '{' '.join(header)}'")
    n, m = (_to_int(t, header_line) for t in header)
    if n < 0 or m < 0:
        raise ValueError(f"Line {header_line}: n and m must be non-negative")

    body = lines[1:]
    if len(body) != m:
        raise ValueError(f"The {what} header announces {m} edges but {len(body)} follow")

    pairs = []
    for line_number, tokens in body:
        if len(tokens) != 2:
            raise ValueError(f"Line {line_number}: expected 'u v', got '{' '.join(tokens)}'")
        u, v = (_to_int(t, line_number) for t in tokens)
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"Line {line_number}: vertex out of range 0..{n - 1} in '{u} {v}'")
        pairs.append((u, v))
    return n, pairs


def format_header_and_pairs(n: int, pairs: List[Tuple[int, int]]) -> str:
    return ''.join([f"{n} {len(pairs)}\n"] + [f"{u} {v}\n" for u, v in pairs])
