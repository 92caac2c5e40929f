#
# django-salmonrun documentation build configuration file
#
# This file is execfile()d with the current directory set to its containing dir.

import datetime
import os
import sys


# If extensions (or modules to document with autodoc) are in another directory,
# add these directories to sys.path here.
sys.path.append(os.path.abspath('../'))
from salmonrun import __version__  # noqa

# -- General configuration -----------------------------------------------------

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.intersphinx', 'sphinx.ext.viewcode']

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

project = 'django-salmonrun'
copyright = f'{datetime.date.today().year}, django-salmonrun contributors'

version = '.'.join(__version__.split('.')[0:2])
release = __version__

for c in ('a', 'b', 'dev', 'r'):
    if c in release:
        tags.add('develop')  # noqa
        break

exclude_patterns = ['_build']

pygments_style = 'sphinx'

# -- Options for HTML output ---------------------------------------------------

html_theme = 'default'

htmlhelp_basename = 'django-salmonrundoc'

# -- Options for LaTeX output --------------------------------------------------

latex_documents = [
    ('index', 'django-salmonrun.tex', 'django-salmonrun Documentation',
     'django-salmonrun contributors', 'manual'),
]

# -- Options for manual page output --------------------------------------------

man_pages = [
    ('index', 'django-salmonrun', 'django-salmonrun Documentation',
     ['django-salmonrun contributors'], 1)
]

intersphinx_mapping = {'python': ('https://docs.python.org/3', None)}
