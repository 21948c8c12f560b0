# Copyright (C) 2021 ISIS Rutherford Appleton Laboratory UKRI
# SPDX - License - Identifier: GPL-3.0-or-later
"""
Text graph format: a first line "n m", then m lines "u v". "u u" is a loop.
"""
from logging import getLogger

from interlacepoly.core.graph.simple_graph import SimpleGraph
from interlacepoly.core.io.utility import format_header_and_pairs, parse_header_and_pairs, read_source

LOG = getLogger(__name__)


def parse_graph(text: str) -> SimpleGraph:
    n, pairs = parse_header_and_pairs(text, "graph")
    seen = set()
    for u, v in pairs:
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ValueError(f"Duplicate edge {key[0]} {key[1]}")
        seen.add(key)
    g = SimpleGraph.from_edges(n, pairs)
    LOG.debug(f"Parsed graph with {g.n} vertices and {len(pairs)} edges")
    return g


def format_graph(g: SimpleGraph) -> str:
    return format_header_and_pairs(g.n, g.edges())


def read_graph(source: str) -> SimpleGraph:
    """
    :param source: '-' for stdin, a file path, or the inline text with ';' between lines
    """
    return parse_graph(read_source(source))
