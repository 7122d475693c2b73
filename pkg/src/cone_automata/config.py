"""Runtime configuration for cone-automata audits."""

import os
from dataclasses import dataclass
from pathlib import Path


def _env_bool(name: str, default: bool) -> bool:
    value = os.getenv(name)
    if value is None:
        return default
    return value.strip().lower() in {"1", "true", "yes", "on"}


def _env_int(name: str, default: int) -> int:
    value = os.getenv(name)
    if value is None:
        return default
    try:
        return int(value)
    except ValueError:
        return default


@dataclass(frozen=True)
class AuditDefaults:
    ball_radius: int
    closure_radius: int
    max_word_len: int
    prune_to_window: bool


def get_audit_defaults() -> AuditDefaults:
    """Load audit budgets from environment variables."""
    ball_radius = max(0, _env_int("CONE_AUTOMATA_BALL_RADIUS", 4))
    return AuditDefaults(
        ball_radius=ball_radius,
        closure_radius=max(ball_radius, _env_int("CONE_AUTOMATA_CLOSURE_RADIUS", 8)),
        max_word_len=max(ball_radius, _env_int("CONE_AUTOMATA_MAX_WORD_LEN", 12)),
        prune_to_window=_env_bool("CONE_AUTOMATA_PRUNE_TO_WINDOW", True),
    )


def get_golden_dir(default: Path) -> Path:
    """Directory holding golden machine files; ``CONE_AUTOMATA_GOLDEN_DIR`` overrides ``default``."""
    value = os.getenv("CONE_AUTOMATA_GOLDEN_DIR")
    return Path(value) if value else default
