# Copyright (C) 2021 ISIS Rutherford Appleton Laboratory UKRI
# SPDX - License - Identifier: GPL-3.0-or-later

from .digraph import (EulerianDigraph, ValidationResult, from_closed_walk, random_eulerian_digraph,  # noqa: F401
                      require_valid, transitions, validate)
from .states import (GraphState, circuit_partition_poly, count_cycles, enumerate_states, martin_poly,  # noqa: F401
                     state_histogram)
from .circuits import all_euler_circuits, euler_circuit, euler_circuit_edges  # noqa: F401
from .chord_diagram import (ChordDiagram, chord_diagram_from_circuit, circle_graph, circle_graph_of,  # noqa: F401
                            interlace_matrix, interlace_side, is_interlaced, verify_circuit_partition_identity)
from .io import format_digraph, parse_chord_word, parse_digraph, read_digraph, read_word  # noqa: F401
