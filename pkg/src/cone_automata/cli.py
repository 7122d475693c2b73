"""Command-line entry point for cone-automata."""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence
from typing import Any, NoReturn

from pydantic import ValidationError

from cone_automata import __version__
from cone_automata.commands import accepts, build, list_constructions, tau, verify
from cone_automata.contracts import build_error
from cone_automata.errors import (
    AlphabetError,
    ConeAutomataError,
    ParameterError,
    UnknownConstructionError,
)
from cone_automata.formatting import format_library_error, format_validation_error, render_json

logger = logging.getLogger("cone-automata.cli")

EXIT_USAGE = 64
EXIT_CONSTRUCTION = 70

_USAGE_ERRORS = (AlphabetError, ParameterError, UnknownConstructionError)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="cone-automata",
        description="Build, export and audit machines for positive cones of left-orderable groups",
    )
    parser.add_argument("--version", "-v", action="version", version=f"cone-automata {__version__}")
    parser.add_argument(
        "--log-level",
        choices=["debug", "info", "warning", "error"],
        default="warning",
        help="Log level for cone-automata (default: warning)",
    )
    subparsers = parser.add_subparsers(dest="verb", required=True)

    build.register(subparsers)
    accepts.register(subparsers)
    verify.register(subparsers)
    tau.register(subparsers)
    list_constructions.register(subparsers)
    return parser


def parse_params(extras: Sequence[str]) -> dict[str, Any]:
    """Collect ``--key value`` / ``--key=value`` pairs; dashes in keys become underscores."""
    params: dict[str, Any] = {}
    tokens = list(extras)
    while tokens:
        token = tokens.pop(0)
        if not token.startswith("--") or token == "--":
            raise UsageError(f"unexpected argument {token!r}")
        key, sep, value = token[2:].partition("=")
        if not sep:
            if not tokens:
                raise UsageError(f"missing value for {token}")
            value = tokens.pop(0)
        params[key.replace("-", "_")] = value
    return params


def _fail(payload: dict[str, Any], code: int) -> int:
    sys.stderr.write(render_json(payload))
    return code


def run(argv: Sequence[str] | None = None) -> int:
    """Run one CLI invocation and return its exit status."""
    parser = build_parser()
    try:
        args, extras = parser.parse_known_args(argv)
        params = parse_params(extras)
        if params and not args.takes_params:
            raise UsageError(f"{args.verb} takes no parameters, got {sorted(params)}")
    except UsageError as exc:
        return _fail(build_error("usage", str(exc)), EXIT_USAGE)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 0

    logging.basicConfig(
        level=getattr(logging, args.log_level.upper()),
        format="%(levelname)s %(name)s: %(message)s",
    )
    construction = getattr(args, "construction", None)
    try:
        return int(args.handler(args, params))
    except ValidationError as exc:
        return _fail(format_validation_error(exc, construction=construction), EXIT_USAGE)
    except _USAGE_ERRORS as exc:
        return _fail(format_library_error(exc), EXIT_USAGE)
    except ConeAutomataError as exc:
        logger.debug("construction failed", exc_info=True)
        return _fail(format_library_error(exc), EXIT_CONSTRUCTION)


def main() -> None:
    """Entry point for the cone-automata command."""
    sys.exit(run())


if __name__ == "__main__":
    main()
