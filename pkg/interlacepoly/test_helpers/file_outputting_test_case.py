# Copyright (C) 2021 ISIS Rutherford Appleton Laboratory UKRI
# SPDX - License - Identifier: GPL-3.0-or-later

import os
import shutil
import tempfile
import unittest


class FileOutputtingTestCase(unittest.TestCase):
    def __init__(self, *args, **kwargs):
        super(FileOutputtingTestCase, self).__init__(*args, **kwargs)

        self.output_directory = None

    def setUp(self):
        self.output_directory = tempfile.mkdtemp(prefix='interlacepoly_test_tmp_')

    def tearDown(self):
        shutil.rmtree(path=self.output_directory, ignore_errors=True)

    def write_input(self, name: str, text: str) -> str:
        """
        Writes an input file into the temporary directory and returns its path.
        """
        path = os.path.join(self.output_directory, name)
        with open(path, 'w', encoding='utf-8') as f:
            f.write(text)
        return path
