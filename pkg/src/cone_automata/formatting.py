"""Word parsing and error rendering helpers for CLI output."""

from __future__ import annotations

import json
from typing import Any

from pydantic import ValidationError

from cone_automata.contracts import build_error
from cone_automata.errors import ConeAutomataError
from cone_automata.utils import EPSILON_TEXT

# =============================================================================
# Words
# =============================================================================


def parse_word(text: str) -> tuple[str, ...]:
    """Parse a space-separated word such as ``"a b' a"``.

    ``""`` and ``"ε"`` both denote the empty word.
    """
    tokens = text.split()
    if tokens == [EPSILON_TEXT]:
        return ()
    return tuple(tokens)


def format_word(word: tuple[str, ...] | list[str]) -> str:
    return " ".join(word) if word else EPSILON_TEXT


def render_json(payload: Any) -> str:
    """One line of UTF-8 JSON, newline-terminated."""
    return json.dumps(payload, ensure_ascii=False) + "\n"


# =============================================================================
# Error rendering
# =============================================================================


def format_library_error(exc: ConeAutomataError, **details: Any) -> dict[str, Any]:
    """Render a library exception as an error envelope."""
    return build_error(
        exc.code,
        str(exc),
        {"type": type(exc).__name__, **details} if details else {"type": type(exc).__name__},
    )


def format_validation_error(exc: ValidationError, *, construction: str | None = None) -> dict[str, Any]:
    """Render a pydantic validation failure of command parameters."""
    problems = [
        {"field": ".".join(str(part) for part in err["loc"]) or "(root)", "message": err["msg"]} for err in exc.errors()
    ]
    details: dict[str, Any] = {"problems": problems}
    if construction is not None:
        details["construction"] = construction
    return build_error("invalid_parameters", "parameter validation failed", details)
