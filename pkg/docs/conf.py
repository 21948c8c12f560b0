# Copyright (C) 2021 ISIS Rutherford Appleton Laboratory UKRI
# SPDX - License - Identifier: GPL-3.0-or-later

# -*- coding: utf-8 -*-
#
# interlacepoly documentation build configuration file.

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.intersphinx',
    'sphinx.ext.todo',
    'sphinx.ext.coverage',
    'sphinx.ext.viewcode',
    'sphinx.ext.imgmath',
    'sphinx.ext.autosectionlabel',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

# General information about the project.
project = u'interlacepoly'
copyright = u'2021, ISIS Rutherford Appleton Laboratory UKRI'
author = u'interlacepoly developers'

# The short X.Y version.
version = u'1.0'
# The full version, including alpha/beta/rc tags.
release = u'1.0.0'

language = None
exclude_patterns = ['build']
pygments_style = 'sphinx'
todo_include_todos = True

html_theme = 'alabaster'
html_static_path = []
htmlhelp_basename = 'interlacepolydoc'

man_pages = [(master_doc, 'interlacepoly', u'interlacepoly Documentation', [author], 1)]

intersphinx_mapping = {'https://docs.python.org/': None}
html_use_smartypants = False
