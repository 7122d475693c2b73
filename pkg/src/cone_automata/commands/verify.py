"""``verify``: audit a cone on a ball and run its property checks."""

import argparse
import logging
import sys
from typing import Any

from cone_automata.contracts import build_error, build_ok
from cone_automata.formatting import render_json
from cone_automata.registry import get_construction

logger = logging.getLogger("cone-automata.cli")


def register(subparsers: Any) -> None:
    """Register the verify verb."""
    parser = subparsers.add_parser(
        "verify",
        help="Audit a cone construction on a ball",
        description=(
            "Exit status: 0 clean, 1 violations or failed properties, "
            "2 only inconclusive elements left uncovered."
        ),
    )
    parser.add_argument("construction", help="Registered cone construction name (see `list`)")
    parser.add_argument("--radius", type=int, default=None, help="Ball radius")
    parser.add_argument("--closure-radius", type=int, default=None, help="Window radius for products")
    parser.add_argument("--max-word-len", type=int, default=None, help="Longest accepted word enumerated")
    parser.add_argument("--no-prune", action="store_true", help="Enumerate words without pruning to the window")
    parser.set_defaults(handler=run, takes_params=True)


def run(args: argparse.Namespace, params: dict[str, Any]) -> int:
    entry = get_construction(args.construction)
    if not entry.is_cone:
        sys.stderr.write(
            render_json(build_error("not_a_cone", f"{entry.name} builds a machine, not a cone", {"construction": entry.name}))
        )
        return 64
    cfg = entry.audit_config(
        ball_radius=args.radius,
        closure_radius=args.closure_radius,
        max_word_len=args.max_word_len,
        prune_to_window=False if args.no_prune else None,
    )
    report = entry.verify(params, cfg)
    logger.info("%s: exit code %d", entry.name, report.exit_code)
    sys.stdout.write(render_json(build_ok(report.model_dump(mode="json"))))
    return report.exit_code
