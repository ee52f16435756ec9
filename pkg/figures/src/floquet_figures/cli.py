"""Command line entry point: render sweep datasets to images."""
from __future__ import annotations

import argparse
import sys

from .errors import FigureError
from .recipes import PRESETS, make_recipe
from .render import render

EXIT_OK = 0
EXIT_SCHEMA = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="floquet-figures",
        description="Render quasienergy sweep datasets to raster figures")
    sub = parser.add_subparsers(dest="command", required=True)
    rend = sub.add_parser("render", help="render one preset figure")
    rend.add_argument("--preset", required=True, choices=PRESETS)
    rend.add_argument("--in", dest="inputs", action="append", required=True,
                      metavar="PATH", help="input dataset (repeatable)")
    rend.add_argument("--out", required=True, help="output image path")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        recipe = make_recipe(args.preset, args.inputs, args.out)
        out = render(recipe)
    except FigureError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_SCHEMA
    print(f"wrote {out}")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
