"""``tau``: value of the ordering quasi-morphism on a word."""

import argparse
import sys
from typing import Any

from cone_automata.cones.quasimorphism import TAU_SETUPS
from cone_automata.contracts import build_ok
from cone_automata.errors import ParameterError
from cone_automata.formatting import format_word, parse_word, render_json
from cone_automata.groups import build_group
from cone_automata.registry import AmalgamParams


def register(subparsers: Any) -> None:
    """Register the tau verb."""
    parser = subparsers.add_parser(
        "tau",
        help="Evaluate the ordering quasi-morphism of a free product or amalgam",
    )
    parser.add_argument("word", help="Space-separated word over the group generators")
    parser.add_argument("--setup", choices=sorted(TAU_SETUPS), default="f2", help="Group and factor orders (default: f2)")
    parser.set_defaults(handler=run, takes_params=True)


def run(args: argparse.Namespace, params: dict[str, Any]) -> int:
    if args.setup == "bs_amalgam":
        amalgam = AmalgamParams.model_validate(params)
        setup = TAU_SETUPS[args.setup](amalgam.m, amalgam.n)
    else:
        setup = TAU_SETUPS[args.setup]()
        if params:
            raise ParameterError(f"setup {args.setup} takes no parameters, got {sorted(params)}")
    word = parse_word(args.word)
    group = build_group(setup.group)
    element = group.evaluate(word)
    value = setup.tau(element)
    outputs = sorted(setup.transducer().outputs(word))
    data = {
        "setup": setup.name,
        "word": format_word(word),
        "element": group.format(element),
        "tau": value,
        "transducer_outputs": [format_word(output) for output in outputs],
    }
    sys.stdout.write(render_json(build_ok(data)))
    return 0
