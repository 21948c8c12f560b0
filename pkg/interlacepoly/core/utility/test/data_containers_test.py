# Copyright (C) 2021 ISIS Rutherford Appleton Laboratory UKRI
# SPDX - License - Identifier: GPL-3.0-or-later

import unittest

from interlacepoly.core.utility.data_containers import (CLOSED_FORM_MAX_N, STRUCTURAL_MAX_N, RunConfig,
                                                        check_size)


class RunConfigTest(unittest.TestCase):
    def test_defaults(self):
        config = RunConfig('qn', input_path='-')
        self.assertEqual(config.output_format, 'text')
        self.assertEqual(config.to_dict()['input_path'], '-')

    def test_rejects_unknown_format(self):
        with self.assertRaises(ValueError):
            RunConfig('qn', output_format='xml')

    def test_rejects_max_n_over_structural_cap(self):
        with self.assertRaises(ValueError):
            RunConfig('verify', max_n=STRUCTURAL_MAX_N + 1)
        with self.assertRaises(ValueError):
            RunConfig('verify', max_n=-1)

    def test_check_size(self):
        check_size(CLOSED_FORM_MAX_N, CLOSED_FORM_MAX_N, "closed form")
        with self.assertRaisesRegex(ValueError, "at most 24 vertices, got 25"):
            check_size(25, CLOSED_FORM_MAX_N, "closed form")
