# Copyright (C) 2021 ISIS Rutherford Appleton Laboratory UKRI
# SPDX - License - Identifier: GPL-3.0-or-later

from . import gf2, poly, graph, interlace, isotropic, eulerian, parallel, utility  # noqa: F401
