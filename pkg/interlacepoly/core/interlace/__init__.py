# Copyright (C) 2021 ISIS Rutherford Appleton Laboratory UKRI
# SPDX - License - Identifier: GPL-3.0-or-later

from .vertex_nullity import (QnMethod, full_rank_subset_count, qn, qn_avdh, qn_avdh_reference, qn_bouchet,  # noqa: F401
                             qn_closed, qn_closed_reference, qn_from_q2, qn_recursive, recursion_edge_independence)
from .two_variable import q2_closed, q2_reduction  # noqa: F401
