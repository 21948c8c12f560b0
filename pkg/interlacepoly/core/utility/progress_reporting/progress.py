# Copyright (C) 2021 ISIS Rutherford Appleton Laboratory UKRI
# SPDX - License - Identifier: GPL-3.0-or-later

import threading
import time
from collections import namedtuple
from logging import getLogger
from typing import List, Optional

import numpy

from interlacepoly.core.utility.memory_usage import get_memory_usage_str

ProgressHistory = namedtuple('ProgressHistory', ['time', 'step', 'msg'])

LOG = getLogger(__name__)


class ProgressHandler(object):
    def __init__(self):
        self.progress: Optional['Progress'] = None

    def progress_update(self):
        raise NotImplementedError("Need to implement this method in the child class")


STEPS_TO_AVERAGE = 16


def _format_seconds(t: float) -> str:
    t = int(t)
    return f'{t // 3600:02}:{t % 3600 // 60:02}:{t % 60:02}'


class Progress(object):
    """
    Tracks how many chunks of an enumeration have been processed.

    Handlers are notified on every update. Nothing is attached by default, the command line
    adds a ConsoleProgressBar only when asked to so that standard output stays clean.
    """
    @staticmethod
    def ensure_instance(p: Optional['Progress'] = None, num_steps: Optional[int] = None,
                        task_name: str = 'Task') -> 'Progress':
        if p is None:
            p = Progress(num_steps=0, task_name=task_name)

        if num_steps:
            p.add_estimated_steps(num_steps)

        return p

    def __init__(self, num_steps: int = 1, task_name: str = 'Task'):
        self.task_name = task_name

        self.current_step = 0
        self.end_step = num_steps
        self.complete = False

        self.progress_history: List[ProgressHistory] = []
        self._average_time: float = 0

        self.lock = threading.Lock()
        self.progress_handlers: List[ProgressHandler] = []
        self.context_nesting_level = 0
        self.cancel_msg: Optional[str] = None

        self.update(0, 'init')
        LOG.debug("Memory usage before %s: %s", task_name, get_memory_usage_str())

    def __str__(self):
        return 'Progress(\n{})'.format('\n'.join([str(ph) for ph in self.progress_history]))

    def __enter__(self):
        self.context_nesting_level += 1
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.context_nesting_level -= 1
        if self.context_nesting_level == 0:
            self.mark_complete()

    def is_completed(self) -> bool:
        return self.complete

    def completion(self) -> float:
        """
        Fraction of the estimated steps done, in the range 0.0 - 1.0
        """
        with self.lock:
            if self.end_step == 0:
                return 1.0
            return round(self.current_step / self.end_step, 3)

    def execution_time(self) -> float:
        """
        Seconds between the first real update and the latest one.
        """
        if len(self.progress_history) > 2:
            return self.progress_history[-1].time - self.progress_history[1].time
        return 0.0

    def add_estimated_steps(self, num_steps: int):
        self.end_step += num_steps

    def add_progress_handler(self, handler: ProgressHandler):
        if not isinstance(handler, ProgressHandler):
            raise ValueError("Progress handlers must be of type ProgressHandler")

        self.progress_handlers.append(handler)
        handler.progress = self

    def update(self, steps: int = 1, msg: str = "", force_continue: bool = False):
        """
        Records that `steps` more chunks are done.

        :param force_continue: Do not raise even if the task was cancelled
        """
        with self.lock:
            self.current_step += steps
            if self.current_step > self.end_step:
                self.end_step = self.current_step

            if self.current_step > 0 and self.current_step % STEPS_TO_AVERAGE == 0:
                times = numpy.asarray([h.time for h in self.progress_history[-STEPS_TO_AVERAGE:]],
                                      dtype=numpy.float64)
                if times.size > 1:
                    self._average_time = float(numpy.diff(times).mean())

            eta = self._average_time * (self.end_step - self.current_step)
            text = f"{msg} | {self.current_step}/{self.end_step} | " \
                   f"Time: {_format_seconds(self.execution_time())}, ETA: {_format_seconds(eta)}"
            self.progress_history.append(ProgressHistory(time.perf_counter(), self.current_step, text))

        for handler in self.progress_handlers:
            handler.progress_update()

        if self.should_cancel and not force_continue:
            raise RuntimeError('Task has been cancelled')

    def cancel(self, msg: str = 'cancelled'):
        """
        Marks the enumeration for cancellation, the next call to update() raises.
        """
        self.cancel_msg = msg

    @property
    def should_cancel(self) -> bool:
        return self.cancel_msg is not None

    def mark_complete(self, msg: str = 'complete'):
        if not self.should_cancel:
            self.complete = True

        self.update(0, msg=self.cancel_msg if self.should_cancel else msg, force_continue=True)
        if self.complete:
            self.end_step = self.current_step

        LOG.info("%s finished in %.3f sec.", self.task_name, self.execution_time())
        LOG.debug("Memory usage after %s: %s", self.task_name, get_memory_usage_str())
