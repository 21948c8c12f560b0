# Copyright (C) 2021 ISIS Rutherford Appleton Laboratory UKRI
# SPDX - License - Identifier: GPL-3.0-or-later

import time
from typing import Optional


class ExecutionTimer(object):
    """
    Context handler used to time the execution of code in its context.
    """
    def __init__(self, msg: Optional[str] = 'Elapsed time'):
        self.msg = msg

        self.time_start: Optional[float] = None
        self.time_end: Optional[float] = None

    def __str__(self):
        prefix = '{}: '.format(self.msg) if self.msg else ''
        sec = self.total_seconds
        return '{}{} seconds'.format(prefix, f'{sec:.3f}' if sec is not None else 'unknown')

    def __enter__(self):
        self.time_start = time.perf_counter()
        self.time_end = None
        return self

    def __exit__(self, *args):
        self.time_end = time.perf_counter()

    @property
    def total_seconds(self) -> Optional[float]:
        """
        Seconds the timer ran for, None if it has not been run or is still running.
        """
        if self.time_start is None or self.time_end is None:
            return None
        return self.time_end - self.time_start
