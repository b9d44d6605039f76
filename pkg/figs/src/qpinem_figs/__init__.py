from .recipes import FIGURE_IDS, RecipeError, StaleDataError, load_recipe, pin_recipe, save_recipe
from .render import render

__version__ = "0.1.0"
