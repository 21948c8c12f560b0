# Copyright (C) 2021 ISIS Rutherford Appleton Laboratory UKRI
# SPDX - License - Identifier: GPL-3.0-or-later

import unittest
from unittest import mock

from interlacepoly.core.utility import ExecutionTimer


class ExecutionTimerTest(unittest.TestCase):
    @mock.patch('interlacepoly.core.utility.execution_timer.time.perf_counter', side_effect=[10.0, 12.25])
    def test_measures_between_enter_and_exit(self, _):
        t = ExecutionTimer(msg='five-way')
        self.assertIsNone(t.total_seconds)
        self.assertEqual(str(t), 'five-way: unknown seconds')

        with t:
            self.assertIsNone(t.total_seconds)

        self.assertEqual(t.total_seconds, 2.25)
        self.assertEqual(str(t), 'five-way: 2.250 seconds')

    def test_enter_returns_timer(self):
        with ExecutionTimer(msg='check') as t:
            pass
        self.assertIsInstance(t, ExecutionTimer)
        self.assertGreaterEqual(t.total_seconds, 0.0)

    def test_default_message(self):
        self.assertEqual(str(ExecutionTimer()), 'Elapsed time: unknown seconds')

    def test_no_message(self):
        self.assertEqual(str(ExecutionTimer(msg='')), 'unknown seconds')
        self.assertEqual(str(ExecutionTimer(msg=None)), 'unknown seconds')


if __name__ == "__main__":
    unittest.main()
