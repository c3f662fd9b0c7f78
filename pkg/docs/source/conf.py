# -*- coding: utf-8 -*-
#
# qextremal documentation build configuration file
#
# This file is execfile()d with the current directory set to its containing dir.

import sys
from os import path

from pkg_resources import parse_version

sys.path.insert(0, path.abspath('../..'))

from qextremal import __version__  # noqa: E402

# -- General configuration -----------------------------------------------------

extensions = []

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

project = u'qextremal'
copyright = u'2026, qextremal contributors'

version = parse_version(__version__).base_version if __version__ != "unknown" else __version__
release = __version__

devel = "dev" in __version__

# Autodoc

extensions.append('sphinx.ext.autodoc')

autodoc_default_flags = ['show-inheritance']
autoclass_content = 'both'
autodoc_member_order = 'bysource'

extensions.append('sphinx.ext.ifconfig')
extensions.append('sphinx.ext.mathjax')
extensions.append('sphinx.ext.todo')

todo_include_todos = devel

# Releases changelog extension

extensions.append("releases")

releases_debug = True
releases_document_name = "changes"
releases_unstable_prehistory = True

today_fmt = '%B %d, %Y'

exclude_trees = []

pygments_style = 'sphinx'

# -- Options for HTML output ---------------------------------------------------

html_theme = 'default'

html_static_path = []

htmlhelp_basename = 'qextremaldoc'

# -- Options for LaTeX output --------------------------------------------------

latex_documents = [
    (
        'index', 'qextremal.tex', u'qextremal Documentation',
        u'qextremal contributors', 'manual'
    ),
]


def setup(app):
    # ifconfig variables
    app.add_config_value('devel', '', devel)
