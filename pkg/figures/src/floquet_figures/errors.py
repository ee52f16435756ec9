"""Error types for the figure pipeline."""


class FigureError(Exception):
    """Base class for figure pipeline failures."""


class MissingDataset(FigureError):
    """An input dataset path does not exist."""


class SchemaMismatch(FigureError):
    """A dataset is empty, malformed, or does not match the recipe."""
