# -*- coding: utf-8 -*-
#
# apsk-bounds documentation build configuration file.
#
# This file is execfile()d with the current directory set to its containing dir.

import os
import sys

sys.path.insert(0, os.path.abspath('..'))  # noqa

import apsk_bounds  # noqa: E402

try:
    import sphinx_rtd_theme
except ImportError:
    sphinx_rtd_theme = False

# -- General configuration -----------------------------------------------------

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.napoleon']

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

project = u'apsk-bounds'
copyright = u''

# The short X.Y version and the full version, including alpha/beta/rc tags.
version = apsk_bounds.__version__
release = apsk_bounds.__version__

exclude_patterns = ['_build']

pygments_style = 'sphinx'

# -- Options for HTML output ---------------------------------------------------

html_theme = 'sphinx_rtd_theme' if sphinx_rtd_theme else 'default'

html_theme_path = [sphinx_rtd_theme.get_html_theme_path()] if sphinx_rtd_theme else []

html_static_path = []

htmlhelp_basename = 'apsk-bounds-doc'

# -- Options for LaTeX output --------------------------------------------------

latex_elements = {}

latex_documents = [
    ('index', 'apsk-bounds.tex', u'apsk-bounds Documentation', u'', 'manual'),
]

# -- Options for manual page output --------------------------------------------

man_pages = [
    ('index', 'apsk-bounds', u'apsk-bounds Documentation', [u''], 1),
]
