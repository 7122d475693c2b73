"""``accepts``: membership of a word, with outputs for transducers."""

import argparse
import sys
from typing import Any

from cone_automata.automata.transducer import Transducer
from cone_automata.cones.language import ConeLanguage
from cone_automata.contracts import build_ok
from cone_automata.formatting import format_word, parse_word, render_json
from cone_automata.registry import get_construction


def register(subparsers: Any) -> None:
    """Register the accepts verb."""
    parser = subparsers.add_parser(
        "accepts",
        help="Test whether a construction accepts a word",
        description='Words are space-separated letters, e.g. "a b\' a"; "" or "ε" is the empty word.',
    )
    parser.add_argument("construction", help="Registered construction name (see `list`)")
    parser.add_argument("word", help="Space-separated word")
    parser.set_defaults(handler=run, takes_params=True)


def run(args: argparse.Namespace, params: dict[str, Any]) -> int:
    entry = get_construction(args.construction)
    artifact = entry.build(params)
    word = parse_word(args.word)
    data: dict[str, Any] = {"construction": entry.name, "word": format_word(word)}
    if isinstance(artifact, Transducer):
        outputs = sorted(artifact.outputs(word))
        data["accepted"] = bool(outputs)
        data["outputs"] = [format_word(output) for output in outputs]
    else:
        machine = artifact.machine if isinstance(artifact, ConeLanguage) else artifact
        data["accepted"] = machine.accepts(word)
    sys.stdout.write(render_json(build_ok(data)))
    return 0
