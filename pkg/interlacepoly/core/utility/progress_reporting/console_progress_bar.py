# Copyright (C) 2021 ISIS Rutherford Appleton Laboratory UKRI
# SPDX - License - Identifier: GPL-3.0-or-later

import sys
from typing import TextIO

from .progress import ProgressHandler


def _print_ascii_progress_bar(stream: TextIO, progress: float, bar_len: int, prefix: str = '', suffix: str = ''):
    filled_len = int(round(bar_len * progress))

    if prefix:
        prefix = prefix + ': '

    stream.write('{}[{}{}]{}\r'.format(prefix, '=' * filled_len, '-' * (bar_len - filled_len), suffix))
    stream.flush()


class ConsoleProgressBar(ProgressHandler):
    """
    Draws the progress on the error stream, stdout carries the results.
    """
    def __init__(self, width: int = 50, stream: TextIO = None):
        super(ConsoleProgressBar, self).__init__()
        self.width = width
        self.stream = stream if stream is not None else sys.stderr

    def progress_update(self):
        suffix = '{}/{}'.format(self.progress.current_step, self.progress.end_step)
        _print_ascii_progress_bar(self.stream, self.progress.completion(), self.width, self.progress.task_name,
                                  suffix)

        if self.progress.is_completed():
            self.stream.write('\n')
