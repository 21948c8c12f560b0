# Copyright (C) 2021 ISIS Rutherford Appleton Laboratory UKRI
# SPDX - License - Identifier: GPL-3.0-or-later

from . import progress_reporting, memory_usage, data_containers  # noqa: F401

from .execution_timer import ExecutionTimer  # noqa: F401
