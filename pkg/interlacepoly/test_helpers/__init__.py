# Copyright (C) 2021 ISIS Rutherford Appleton Laboratory UKRI
# SPDX - License - Identifier: GPL-3.0-or-later
"""
This package contains testing helpers for unit tests across the application
"""
from interlacepoly.test_helpers.file_outputting_test_case import FileOutputtingTestCase  # noqa: F401
