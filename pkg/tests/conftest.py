"""Shared fixtures: golden files and small audit budgets."""

from pathlib import Path

import pytest

from cone_automata.config import get_golden_dir
from cone_automata.verify import AuditConfig

GOLDEN_DIR = get_golden_dir(Path(__file__).parent / "golden")


def pytest_addoption(parser):
    parser.addoption(
        "--update-golden",
        action="store_true",
        default=False,
        help="Rewrite golden files from the current output instead of comparing",
    )


@pytest.fixture
def golden(request):
    """Compare text with ``tests/golden/<name>`` byte for byte."""
    update = request.config.getoption("--update-golden")

    def check(name, text):
        path = GOLDEN_DIR / name
        if update:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_bytes(text.encode("utf-8"))
            return
        assert path.exists(), f"missing golden file {path}; run pytest --update-golden"
        assert text.encode("utf-8") == path.read_bytes()

    return check


@pytest.fixture
def small_audit():
    return AuditConfig(ball_radius=3, closure_radius=3, max_word_len=8)
