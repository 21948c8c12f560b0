# Copyright (C) 2021 ISIS Rutherford Appleton Laboratory UKRI
# SPDX - License - Identifier: GPL-3.0-or-later
"""
Digraphs use the graph text format with "u v" meaning an edge from u to v; repeats and loops are
allowed. Chord diagrams are one line of whitespace separated symbols.
"""
from logging import getLogger

from interlacepoly.core.eulerian.chord_diagram import ChordDiagram
from interlacepoly.core.eulerian.digraph import EulerianDigraph
from interlacepoly.core.io.utility import format_header_and_pairs, parse_header_and_pairs, read_source

LOG = getLogger(__name__)


def parse_digraph(text: str) -> EulerianDigraph:
    n, pairs = parse_header_and_pairs(text, "digraph")
    d = EulerianDigraph(n, tuple(pairs))
    LOG.debug(f"Parsed digraph with {d.n} vertices and {d.num_edges} edges")
    return d


def format_digraph(d: EulerianDigraph) -> str:
    return format_header_and_pairs(d.n, list(d.edges))


def read_digraph(source: str) -> EulerianDigraph:
    return parse_digraph(read_source(source))


def parse_chord_word(text: str) -> ChordDiagram:
    lines = [line for line in text.splitlines() if line.strip()]
    if len(lines) > 1:
        raise ValueError(f"A chord diagram is a single line of symbols, got {len(lines)} lines")
    return ChordDiagram(tuple(lines[0].split()) if lines else ())


def read_word(source: str) -> ChordDiagram:
    return parse_chord_word(read_source(source))
