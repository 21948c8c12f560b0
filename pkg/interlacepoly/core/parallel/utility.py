# Copyright (C) 2021 ISIS Rutherford Appleton Laboratory UKRI
# SPDX - License - Identifier: GPL-3.0-or-later

import multiprocessing
import os
from functools import partial
from logging import getLogger
from multiprocessing.pool import Pool
from typing import Callable, List, Optional, TypeVar

import numpy as np

from interlacepoly.core.utility.progress_reporting import Progress

LOG = getLogger(__name__)

WORKERS_ENV_VAR = 'INTERLACEPOLY_WORKERS'

# below this many subsets the pool start-up costs more than the sum itself
MIN_PARALLEL_BITS = 12
MAX_CHUNK_BITS = 6

T = TypeVar('T')


def get_cores() -> int:
    value = os.environ.get(WORKERS_ENV_VAR)
    if value is None:
        return multiprocessing.cpu_count()
    try:
        cores = int(value)
    except ValueError:
        raise ValueError(f"{WORKERS_ENV_VAR} must be a positive integer, got '{value}'")
    if cores < 1:
        raise ValueError(f"{WORKERS_ENV_VAR} must be a positive integer, got '{value}'")
    return cores


def subset_chunk_bits(n: int) -> int:
    """
    Number of high-order subset bits that select a chunk of the 2^n subsets.
    """
    if n <= MIN_PARALLEL_BITS:
        return 0
    return min(MAX_CHUNK_BITS, n - MIN_PARALLEL_BITS)


def multiprocessing_necessary(num_tasks: int, cores: int) -> bool:
    # This environment variable will be present when running PYDEVD from PyCharm
    # and that has the bug that multiprocessing Pools can never finish `.join()` ing
    if 'PYDEVD_LOAD_VALUES_ASYNC' in os.environ and 'PYTEST_CURRENT_TEST' not in os.environ:
        LOG.info("Debugging environment variable 'PYDEVD_LOAD_VALUES_ASYNC' found. Running synchronously on 1 core")
        return False

    if cores == 1:
        LOG.info("1 core specified. Running synchronously on 1 core")
        return False
    if num_tasks <= 1:
        LOG.info("Single chunk. Running synchronously on 1 core")
        return False

    LOG.info(f"Running async on {cores} cores")
    return True


def map_chunks(func: Callable[[int], T],
               num_chunks: int,
               cores: Optional[int] = None,
               progress: Optional[Progress] = None,
               msg: str = "") -> List[T]:
    """
    Calls func(chunk) for every chunk index and returns the results in chunk order.

    func has to be picklable (a module level function or a functools.partial of one) when
    more than one core is used.
    """
    if cores is None:
        cores = get_cores()
    owns_progress = progress is None
    progress = Progress.ensure_instance(progress, num_steps=num_chunks, task_name=msg or 'Task')

    results: List[T] = []
    if multiprocessing_necessary(num_chunks, cores):
        with Pool(min(cores, num_chunks)) as pool:
            for result in pool.imap(func, range(num_chunks), chunksize=1):
                results.append(result)
                progress.update(1, msg)
    else:
        for chunk in range(num_chunks):
            results.append(func(chunk))
            progress.update(1, msg)

    if owns_progress:
        progress.mark_complete()
    return results


def summed_chunk_histograms(kernel: Callable[..., np.ndarray],
                            n: int,
                            progress: Optional[Progress] = None,
                            msg: str = "") -> np.ndarray:
    """
    Splits the 2^n space on its high-order bits, runs kernel(chunk, chunk_bits=...) on every chunk and
    adds up the histograms it returns.
    """
    chunk_bits = subset_chunk_bits(n)
    LOG.debug(f"{msg}: n={n}, {1 << chunk_bits} chunk(s)")
    histograms = map_chunks(partial(kernel, chunk_bits=chunk_bits), 1 << chunk_bits, progress=progress, msg=msg)
    return np.sum(histograms, axis=0)
