"""Render sweep datasets to raster images."""
from __future__ import annotations

from pathlib import Path

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from .datasets import Dataset, GridData, load_dataset, to_grid
from .errors import SchemaMismatch
from .recipes import FigureRecipe

_VALUE_LABEL = {
    "landscape": r"$\Delta_q / \hbar\omega$",
    "absorption": "absorption rate (arb.)",
    "spectrum": "absorption rate (arb.)",
    "twomode": r"gap $/ \hbar\omega$",
}


def resonance_mask(grid: GridData, threshold: float = 0.5) -> np.ndarray:
    """Boolean mask of the bright resonance lines of a map.

    Values are normalized by the dataset maximum, so the mask is invariant
    under overall rescaling of the rate.
    """
    peak = np.nanmax(grid.values)
    if not np.isfinite(peak) or peak <= 0.0:
        raise SchemaMismatch("map has no positive finite values")
    return (grid.values / peak) > threshold


def mask_overlap(a: np.ndarray, b: np.ndarray) -> float:
    """Intersection over union of two boolean masks of equal shape."""
    if a.shape != b.shape:
        raise SchemaMismatch(f"mask shapes differ: {a.shape} vs {b.shape}")
    union = np.count_nonzero(a | b)
    if union == 0:
        return 1.0
    return np.count_nonzero(a & b) / union


def _check_preset_tag(recipe: FigureRecipe, ds: Dataset) -> None:
    tag = ds.metadata.get("preset")
    if tag is not None and tag != recipe.preset:
        raise SchemaMismatch(
            f"dataset tagged {tag!r} does not match recipe {recipe.preset!r}")


def _render_map(recipe: FigureRecipe, grid: GridData, ax) -> None:
    extent = (grid.amp[0], grid.amp[-1], grid.eps0[0], grid.eps0[-1])
    ax.imshow(grid.values, origin="lower", aspect="auto", extent=extent,
              cmap=recipe.cmap)
    if recipe.levels:
        ax.contour(grid.amp, grid.eps0, grid.values, levels=recipe.levels,
                   colors="white", linewidths=0.8)
    ax.set_xlabel(r"$A / \hbar\omega$")
    ax.set_ylabel(r"$\varepsilon_0 / \hbar\omega$")


def _line_xy(recipe: FigureRecipe, ds: Dataset) -> tuple[np.ndarray, np.ndarray]:
    col = 0 if recipe.scan_axis == "eps0" else 1
    x = ds.rows[:, col]
    y = ds.rows[:, 2]
    order = np.argsort(x)
    x, y = x[order], y[order]
    if recipe.normalize:
        peak = np.nanmax(y)
        if not np.isfinite(peak) or peak <= 0.0:
            raise SchemaMismatch("curve has no positive finite values")
        y = y / peak
    return x, y


def _render_line(recipe: FigureRecipe, datasets: list[Dataset], ax) -> None:
    styles = [dict(lw=1.2), dict(ls="none", marker="o", ms=4,
                                 mfc="none", color="C3")]
    for ds, style in zip(datasets, styles):
        x, y = _line_xy(recipe, ds)
        label = ds.metadata.get("kind", "data")
        ax.plot(x, y, label=label, **style)
    xlabel = (r"$\varepsilon_0 / \hbar\omega$" if recipe.scan_axis == "eps0"
              else r"$A / \hbar\omega$")
    ax.set_xlabel(xlabel)
    kind = datasets[0].metadata.get("kind", "")
    ylabel = _VALUE_LABEL.get(kind, "value")
    if recipe.normalize:
        ylabel = "normalized " + ylabel
    ax.set_ylabel(ylabel)
    if len(datasets) > 1:
        ax.legend(frameon=False)


def render(recipe: FigureRecipe) -> Path:
    """Render the recipe and return the written image path."""
    datasets = [load_dataset(p) for p in recipe.inputs]
    for ds in datasets:
        _check_preset_tag(recipe, ds)

    fig, ax = plt.subplots(figsize=recipe.figsize, dpi=recipe.dpi)
    try:
        if recipe.plot == "map":
            _render_map(recipe, to_grid(datasets[0]), ax)
        else:
            _render_line(recipe, datasets, ax)
        ax.set_title(recipe.preset)
        out = Path(recipe.output)
        fig.savefig(out)
    finally:
        plt.close(fig)
    return out
