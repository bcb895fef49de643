# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

# Configuration file for the Sphinx docs builder.
# https://www.sphinx-doc.org/en/master/usage/configuration.html

import os
import sys
sys.path.insert(0, os.path.abspath('../..'))


# -- Project information -----------------------------------------------------

project = 'fuzzy-dirac'
_copyright = '2024, Fuzzy Dirac developers'
author = 'Fuzzy Dirac developers'

try:
    from importlib.metadata import version as _version
    version = _version("fuzzy-dirac")
except Exception:
    version = "unknown version"

# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.duration',
    'sphinx.ext.doctest',
    'sphinx.ext.autodoc',
    'sphinx.ext.autosummary',
    'sphinx.ext.intersphinx',
    'sphinx.ext.napoleon',
    'sphinx.ext.viewcode',
    'sphinx.ext.mathjax',
    'myst_parser',
]

# Napoleon settings
napoleon_google_docstring = True
napoleon_numpy_docstring = True
napoleon_include_init_with_doc = False
napoleon_include_private_with_doc = False
napoleon_include_special_with_doc = True
napoleon_use_param = True
napoleon_use_rtype = True
napoleon_attr_annotations = True

intersphinx_mapping = {
    'python': ('https://docs.python.org/3/', None),
    'numpy': ('https://numpy.org/doc/stable/', None),
    'scipy': ('https://docs.scipy.org/doc/scipy/', None),
    'pandas': ('https://pandas.pydata.org/docs/', None),
}
intersphinx_disabled_domains = ['std']

templates_path = ['_templates']

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']

source_suffix = {
    '.rst': 'restructuredtext',
    '.txt': 'markdown',
    '.md': 'markdown',
}


# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'

html_title = "fuzzy-dirac Documentation"

html_theme_options = {
    "collapse_navigation": False,
}

add_module_names = False

autoclass_content = "both"
autodoc_inherit_docstrings = True

master_doc = "index"
