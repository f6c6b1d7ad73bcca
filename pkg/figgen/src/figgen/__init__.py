"""Deterministic figure rendering for resonator-chain transport tables.

Reads the CSV/JSON tables written by the ``crwmirror`` command line tool and
renders them as static PNG figures.  Every figure is described by a recipe
that names the table columns it binds; rendering the same inputs twice
produces byte-identical images.
"""

from .recipes import RECIPES, FigureRecipe, RecipeError, render
from .tables import Table, TableFormatError, read_table

__version__ = "0.1.0"

__all__ = [
    "FigureRecipe",
    "RECIPES",
    "RecipeError",
    "Table",
    "TableFormatError",
    "read_table",
    "render",
    "__version__",
]
