"""Command line for rendering recipe figures from table files."""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .recipes import RECIPES, RecipeError, render
from .tables import TableFormatError

EXIT_OK = 0
EXIT_USAGE = 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="figgen",
        description="Render a recipe figure from crwmirror table files.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--list", action="store_true",
                        help="list the available recipe ids and exit")
    parser.add_argument("figure_id", nargs="?", metavar="recipe-id",
                        help="recipe to render (see --list)")
    parser.add_argument("--in", dest="inputs", nargs="+", metavar="TABLE",
                        help="input table file(s), CSV or JSON")
    parser.add_argument("--out", metavar="PNG", help="output image path")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.list:
        width = max(len(fid) for fid in RECIPES)
        for fid, recipe in RECIPES.items():
            print(f"{fid:<{width}}  {recipe.description}")
        return EXIT_OK
    if not (args.figure_id and args.inputs and args.out):
        parser.error("recipe-id, --in and --out are required unless --list is given")
    try:
        notes = render(args.figure_id, args.inputs, args.out)
    except (RecipeError, TableFormatError, OSError) as exc:
        print(f"figgen: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"wrote {args.out}")
    for key in sorted(notes):
        print(f"  {key} = {notes[key]:.17g}")
    return EXIT_OK


def console_main() -> None:
    sys.exit(main())
