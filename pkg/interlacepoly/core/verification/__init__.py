# Copyright (C) 2021 ISIS Rutherford Appleton Laboratory UKRI
# SPDX - License - Identifier: GPL-3.0-or-later

from .suite import CHECKS, CheckResult, all_passed, format_report, run_check, run_suite  # noqa: F401
