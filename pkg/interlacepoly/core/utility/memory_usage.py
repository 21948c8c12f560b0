# Copyright (C) 2021 ISIS Rutherford Appleton Laboratory UKRI
# SPDX - License - Identifier: GPL-3.0-or-later

import psutil


def get_memory_usage(kb: bool = False, mb: bool = False) -> tuple:
    """
    Resident memory of this process.

    :param kb: Include the value in Kilobytes
    :param mb: Include the value in Megabytes
    """
    rss = psutil.Process().memory_info().rss
    values: tuple = tuple()
    if kb:
        values += (rss / 1024, )
    if mb:
        values += (rss / 1024 / 1024, )
    return values


def get_memory_usage_str() -> str:
    memory_in_kbs, memory_in_mbs = get_memory_usage(kb=True, mb=True)
    memory_string = "{0:.0f} KB, {1:.1f} MB".format(memory_in_kbs, memory_in_mbs)

    # stored on the function so that paired before/after calls report the difference
    if not hasattr(get_memory_usage_str, 'last_memory_cache'):
        get_memory_usage_str.last_memory_cache = memory_in_kbs  # type: ignore
    else:
        delta_memory = (memory_in_kbs - get_memory_usage_str.last_memory_cache) / 1024  # type: ignore
        del get_memory_usage_str.last_memory_cache  # type: ignore
        memory_string += ". Memory change: {0:.1f} MB".format(delta_memory)

    return memory_string
