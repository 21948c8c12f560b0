# Copyright (C) 2021 ISIS Rutherford Appleton Laboratory UKRI
# SPDX - License - Identifier: GPL-3.0-or-later

from .simple_graph import SimpleGraph, VertexSet, iter_bits, popcount, vertices_of  # noqa: F401
from .operations import (EMPTY_GRAPH_KEY, adjacency_matrix, canonical_key, delete_vertex,  # noqa: F401
                         delete_vertices, induced_subgraph, is_even_subgraph, least_edge, local_complement,
                         neighborhood_set, pivot, pivot_via_local_complements, swap_labels)
from .io import format_graph, parse_graph, read_graph  # noqa: F401
from . import generators  # noqa: F401
