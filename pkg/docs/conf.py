# Sphinx configuration for the moricone.py documentation.

import os
import sys

sys.path.insert(0, os.path.abspath('..'))

project = 'moricone.py'
copyright = '2026, Giesela Inc.'
author = 'Giesela Inc.'

import moricone

version = moricone.__version__
release = version

# unimport to set type checking flag later
for name in tuple(sys.modules):
    if name.startswith("moricone"):
        del sys.modules[name]

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.intersphinx',
    'sphinx.ext.todo',
    'sphinx.ext.viewcode',
    'sphinx.ext.napoleon',
    'sphinx_autodoc_typehints',
]

set_type_checking_flag = True

nitpicky = True

add_module_names = False
default_role = "py:obj"

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']

html_theme = 'alabaster'
html_static_path = ['_static']
htmlhelp_basename = 'moriconepydoc'

latex_documents = [
    (master_doc, 'moriconepy.tex', 'moricone.py Documentation', author, 'manual'),
]

man_pages = [
    (master_doc, 'moricone', 'moricone.py Documentation', [author], 1),
]

autodoc_member_order = 'bysource'

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'click': ('https://click.palletsprojects.com/en/stable/', None),
    'networkx': ('https://networkx.org/documentation/stable/', None),
}

todo_include_todos = True
