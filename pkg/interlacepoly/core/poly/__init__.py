# Copyright (C) 2021 ISIS Rutherford Appleton Laboratory UKRI
# SPDX - License - Identifier: GPL-3.0-or-later

from .polynomial import (BiPoly, Poly, UniPoly, add, add_shifted_power, divide_by_var, eval_at, mul,  # noqa: F401
                         scale, shifted_power_coefficients, substitute)
