# Copyright (C) 2021 ISIS Rutherford Appleton Laboratory UKRI
# SPDX - License - Identifier: GPL-3.0-or-later

from .klein import NONZERO, KleinElement, KVector, kv_form  # noqa: F401
from .system import (IsotropicSystem, dim_intersection, dim_via_rank_formula, f_hat_basis,  # noqa: F401
                     graphic_system, graphic_system_swapped, has_no_z, in_f_hat, intersection_members,
                     is_isotropic, restriction_criterion, subspace_u_basis, vector_LP)
from .tutte_martin import (allowed_values, choice_to_vector, tutte_martin_canonical,  # noqa: F401
                           tutte_martin_restricted)
