"""Command line: pin figure recipes against simulator outputs and render them.

Exit codes: 0 success, 1 bad arguments/recipe, 2 stale or missing data
(the offending file is named).
"""

import argparse
import sys

from .recipes import FIGURE_IDS, RecipeError, StaleDataError, load_recipe, pin_recipe, save_recipe
from .render import render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qpinem-figs")
    sub = parser.add_subparsers(dest="command", required=True)
    pin = sub.add_parser("pin", help="write a recipe pinned to current data hashes")
    pin.add_argument("--figure", required=True, choices=FIGURE_IDS)
    pin.add_argument("--data-dir", required=True)
    pin.add_argument("--image", required=True, help="output image path (png)")
    pin.add_argument("--recipe", required=True, help="where to write the recipe json")
    ren = sub.add_parser("render", help="render a pinned recipe")
    ren.add_argument("recipe")
    ren.add_argument("--no-svg", action="store_true")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "pin":
            recipe = pin_recipe(args.figure, args.data_dir, args.image)
            save_recipe(recipe, args.recipe)
            print(f"pinned {args.figure} -> {args.recipe}")
        else:
            recipe = load_recipe(args.recipe)
            for path in render(recipe, svg=not args.no_svg):
                print(f"wrote {path}")
        return 0
    except StaleDataError as exc:
        print(f"stale data: {exc}", file=sys.stderr)
        return 2
    except (RecipeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
