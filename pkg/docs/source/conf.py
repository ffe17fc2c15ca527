#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# arithring documentation build configuration file.

import os
import sys

import sphinx_rtd_theme

# -- General configuration ------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.todo",
    "sphinx.ext.coverage",
    "sphinx.ext.viewcode",
    "sphinx.ext.mathjax",
    "sphinxcontrib.napoleon",
    # "autoapi.extension",
]

templates_path = ["_templates"]

source_dir = os.path.dirname(__file__)
doc_dir = os.path.dirname(source_dir)
root_dir = os.path.dirname(doc_dir)
sys.path.append(root_dir)

autoapi_type = "python"
autoapi_dirs = [os.path.join(root_dir, "arithring")]

napoleon_google_docstring = True
napoleon_include_init_with_doc = True

from arithring.__version__ import __version__  # noqa: E402

version = __version__
release = __version__

source_suffix = ".rst"
master_doc = "index"

project = "arithring"
copyright = "2024, arithring developers"
author = "arithring developers"

language = None
exclude_patterns = []
pygments_style = "sphinx"
todo_include_todos = True

# -- Options for HTML output ----------------------------------------------

html_theme = "sphinx_rtd_theme"
html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]
html_static_path = ["_static"]

# -- Options for HTMLHelp output ------------------------------------------

htmlhelp_basename = "arithringdoc"

# -- Options for LaTeX output ---------------------------------------------

latex_documents = [
    (master_doc, "arithring.tex", "arithring Documentation", author, "manual")
]

# -- Options for manual page output ---------------------------------------

man_pages = [(master_doc, "arithring", "arithring Documentation", [author], 1)]
