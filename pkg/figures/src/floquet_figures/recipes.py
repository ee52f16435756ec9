"""Per-preset figure recipes: plot style, overlays, and output geometry."""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .errors import SchemaMismatch

# folded-gap contour levels overlaid on quasienergy landscapes; the lower
# one is the probe energy used throughout, the upper its zone mirror
GAP_LEVELS = (0.092, 0.918)


@dataclass
class FigureRecipe:
    preset: str
    inputs: list[str]
    output: str
    plot: str = "map"            # "map" or "line"
    scan_axis: str = "eps0"      # abscissa for line plots
    levels: tuple = ()           # contour overlay levels for maps
    normalize: bool = False      # divide each curve by its maximum
    cmap: str = "gray_r"
    figsize: tuple = (6.0, 4.5)
    dpi: int = 100


_STYLES = {
    "fig2": dict(plot="line", scan_axis="eps0"),
    "fig5": dict(plot="line", scan_axis="amp", normalize=True),
    "fig8b": dict(plot="line", scan_axis="eps0"),
    "fig8c": dict(plot="line", scan_axis="eps0"),
}
for _p in ("fig3a", "fig3b", "fig3c", "fig3d"):
    _STYLES[_p] = dict(plot="map", levels=GAP_LEVELS, cmap="viridis")
for _p in ("fig4a", "fig4b", "fig4c", "fig4d", "fig6", "fig7"):
    _STYLES[_p] = dict(plot="map", cmap="gray_r")
_STYLES["fig8a"] = dict(plot="map", cmap="magma")

PRESETS = tuple(sorted(_STYLES))


def make_recipe(preset: str, inputs: list[str], output: str) -> FigureRecipe:
    if preset not in _STYLES:
        raise SchemaMismatch(f"unknown preset: {preset!r}")
    if not inputs:
        raise SchemaMismatch("at least one input dataset is required")
    return FigureRecipe(preset=preset, inputs=list(inputs), output=output,
                        **_STYLES[preset])
