# Copyright (C) 2021 ISIS Rutherford Appleton Laboratory UKRI
# SPDX - License - Identifier: GPL-3.0-or-later

# core is not imported here so that --version does not load numpy
__version__ = '1.0.0'
