"""Plotting layer for quasienergy sweep datasets."""
from .datasets import Dataset, GridData, load_dataset, to_grid
from .errors import FigureError, MissingDataset, SchemaMismatch
from .recipes import FigureRecipe, PRESETS, make_recipe
from .render import mask_overlap, render, resonance_mask

__all__ = [
    "Dataset", "FigureError", "FigureRecipe", "GridData", "MissingDataset",
    "PRESETS", "SchemaMismatch", "load_dataset", "make_recipe",
    "mask_overlap", "render", "resonance_mask", "to_grid",
]
__version__ = "0.1.0"
