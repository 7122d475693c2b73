"""``build``: export a construction's machine as DOT or JSON."""

import argparse
import sys
from typing import Any

from cone_automata.automata.dot import to_dot
from cone_automata.automata.serialization import machine_to_json
from cone_automata.cones.language import ConeLanguage
from cone_automata.registry import get_construction
from cone_automata.utils import EmitFormat


def register(subparsers: Any) -> None:
    """Register the build verb."""
    parser = subparsers.add_parser(
        "build",
        help="Write the machine of a construction",
        description="Write the machine of a construction; parameters follow as --key value.",
    )
    parser.add_argument("construction", help="Registered construction name (see `list`)")
    parser.add_argument(
        "--emit",
        choices=[fmt.value for fmt in EmitFormat],
        default=EmitFormat.JSON.value,
        help="Output format (default: json)",
    )
    parser.set_defaults(handler=run, takes_params=True)


def run(args: argparse.Namespace, params: dict[str, Any]) -> int:
    entry = get_construction(args.construction)
    artifact = entry.build(params)
    machine = artifact.machine if isinstance(artifact, ConeLanguage) else artifact
    if EmitFormat(args.emit) is EmitFormat.DOT:
        sys.stdout.write(to_dot(machine, name=entry.name))
    else:
        sys.stdout.write(machine_to_json(machine))
    return 0
