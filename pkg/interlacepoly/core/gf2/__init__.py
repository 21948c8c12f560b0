# Copyright (C) 2021 ISIS Rutherford Appleton Laboratory UKRI
# SPDX - License - Identifier: GPL-3.0-or-later

from .matrix import (GF2Matrix, corank, kernel_basis, nullity, pivot_table, rank, rank_of_rows,  # noqa: F401
                     row_space_contains, stack_rank)
