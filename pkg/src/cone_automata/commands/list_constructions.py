"""``list``: registered constructions with their parameter schemas."""

import argparse
import sys
from typing import Any

from cone_automata.contracts import build_ok
from cone_automata.formatting import render_json
from cone_automata.registry import REGISTRY


def register(subparsers: Any) -> None:
    """Register the list verb."""
    parser = subparsers.add_parser("list", help="List registered constructions")
    parser.set_defaults(handler=run, takes_params=False)


def run(args: argparse.Namespace, params: dict[str, Any]) -> int:
    sys.stdout.write(render_json(build_ok([entry.describe() for entry in REGISTRY.values()])))
    return 0
