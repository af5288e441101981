import os
import sys
from importlib import metadata
from pathlib import Path

current_path = Path(__file__).parent.parent.resolve()
sys.path.append(str(current_path))

project = "chaosrng"
version = metadata.version("chaosrng")
copyright = "2026, chaosrng developers"  # noqa: A001
author = "chaosrng developers"
release = os.getenv("_CHAOSRNG_DOCS_BUILD_VERSION", version.rsplit(".")[0])

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.napoleon",
    "sphinx.ext.autosectionlabel",
    "sphinx.ext.mathjax",
    "sphinx.ext.viewcode",
    "sphinx.ext.intersphinx",
    "sphinx_copybutton",
    "sphinx_design",
]

intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "numpy": ("https://numpy.org/doc/stable/", None),
    "scipy": ("https://docs.scipy.org/doc/scipy/", None),
    "click": ("https://click.palletsprojects.com/en/stable/", None),
}

napoleon_google_docstring = True
autoclass_content = "class"
autodoc_default_options = {
    "show-inheritance": True,
    "members": True,
}
autodoc_member_order = "bysource"
autodoc_typehints_format = "short"
autosectionlabel_prefix_document = True
# dataclass fields are documented twice when napoleon also reads Attributes sections
suppress_warnings = [
    "ref.python",
    "duplicate",
]

templates_path = ["_templates"]
exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]

html_theme = "furo"
html_title = "chaosrng"
