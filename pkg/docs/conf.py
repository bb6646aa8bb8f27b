"""Sphinx configuration file for the monomial-lab documentation.

For more details, see:
https://www.sphinx-doc.org/en/master/usage/configuration.html
"""

import sys
from datetime import datetime
from pathlib import Path

# -- Path setup --------------------------------------------------------------
sys.path.insert(0, str(Path("..").resolve()))

import monomial_lab

# -- Project information -----------------------------------------------------
project = "monomial-lab"
copyright = f"2025-{datetime.now().year}, monomial-lab developers"
author = "monomial-lab developers"
release = monomial_lab.__version__

# -- General configuration ---------------------------------------------------
extensions = [
    "myst_parser",
    "sphinx.ext.autodoc",
    "sphinx.ext.mathjax",
    "sphinx.ext.napoleon",  # Google and NumPy style docstrings.
    "sphinx.ext.autosummary",
    "sphinx.ext.intersphinx",
    "sphinx.ext.doctest",
]

myst_enable_extensions = [
    "amsmath",
    "colon_fence",
    "dollarmath",
    "substitution",
]

myst_substitutions = {"version": monomial_lab.__version__}

source_suffix = {
    ".rst": "restructuredtext",
    ".md": "markdown",
}

exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]

# Autosummary and autodoc settings.
autosummary_generate = True
autodoc_member_order = "bysource"
autodoc_typehints = "description"

autodoc_default_options = {
    "members": True,
    "imported-members": True,
    "undoc-members": True,
    "show-inheritance": True,
}

napoleon_google_docstring = True
napoleon_numpy_docstring = True
napoleon_include_init_with_doc = False
napoleon_use_rtype = True
napoleon_use_param = True

# -- Options for HTML output -------------------------------------------------
html_theme = "pydata_sphinx_theme"
html_show_sourcelink = False
html_show_sphinx = False
add_function_parentheses = False
html_theme_options = {
    "show_toc_level": 1,
    "navbar_align": "left",
}

intersphinx_mapping = {
    "scipy": ("https://docs.scipy.org/doc/scipy/", None),
    "numpy": ("https://numpy.org/doc/stable/", None),
    "python": ("https://docs.python.org/3/", None),
}
