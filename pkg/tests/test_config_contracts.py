"""Tests for configuration, response envelopes and word formatting."""

from pathlib import Path

import pytest
from pydantic import BaseModel, ValidationError

from cone_automata.config import get_audit_defaults, get_golden_dir
from cone_automata.contracts import CommandEnvelope, build_error, build_ok
from cone_automata.errors import RejectedInputError
from cone_automata.formatting import format_library_error, format_validation_error, format_word, parse_word, render_json
from cone_automata.utils import LetterId, SignParam

# --- config ---


def test_audit_defaults(monkeypatch):
    for name in (
        "CONE_AUTOMATA_BALL_RADIUS",
        "CONE_AUTOMATA_CLOSURE_RADIUS",
        "CONE_AUTOMATA_MAX_WORD_LEN",
        "CONE_AUTOMATA_PRUNE_TO_WINDOW",
    ):
        monkeypatch.delenv(name, raising=False)
    defaults = get_audit_defaults()
    assert (defaults.ball_radius, defaults.closure_radius, defaults.max_word_len) == (4, 8, 12)
    assert defaults.prune_to_window is True


def test_audit_defaults_from_environment(monkeypatch):
    monkeypatch.setenv("CONE_AUTOMATA_BALL_RADIUS", "10")
    monkeypatch.setenv("CONE_AUTOMATA_CLOSURE_RADIUS", "3")
    monkeypatch.setenv("CONE_AUTOMATA_MAX_WORD_LEN", "not a number")
    monkeypatch.setenv("CONE_AUTOMATA_PRUNE_TO_WINDOW", "off")
    defaults = get_audit_defaults()
    assert defaults.ball_radius == 10
    assert defaults.closure_radius == 10
    assert defaults.max_word_len == 12
    assert defaults.prune_to_window is False


def test_golden_dir_override(monkeypatch, tmp_path):
    monkeypatch.delenv("CONE_AUTOMATA_GOLDEN_DIR", raising=False)
    assert get_golden_dir(Path("golden")) == Path("golden")
    monkeypatch.setenv("CONE_AUTOMATA_GOLDEN_DIR", str(tmp_path))
    assert get_golden_dir(Path("golden")) == tmp_path


# --- contracts ---


def test_build_ok_shape():
    assert build_ok({"tau": 3}) == {"ok": True, "data": {"tau": 3}}


def test_build_error_shape():
    payload = build_error("usage", "missing verb", {"argv": []})
    assert payload == {"ok": False, "error": {"code": "usage", "message": "missing verb", "details": {"argv": []}}}


def test_envelope_rejects_incoherent_payloads():
    with pytest.raises(ValidationError):
        CommandEnvelope(ok=False)
    with pytest.raises(ValidationError):
        CommandEnvelope(ok=True, error={"code": "x", "message": "y"})


# --- formatting ---


@pytest.mark.parametrize(
    ("text", "word"),
    [
        ("a b' a", ("a", "b'", "a")),
        ("  t   t ", ("t", "t")),
        ("", ()),
        ("ε", ()),
    ],
)
def test_parse_word(text, word):
    assert parse_word(text) == word


def test_format_word():
    assert format_word(()) == "ε"
    assert format_word(("a", "b'")) == "a b'"


def test_render_json_keeps_unicode():
    assert render_json({"word": "ε"}) == '{"word": "ε"}\n'


def test_library_error_envelope():
    payload = format_library_error(RejectedInputError("x", ("t", "t'")))
    assert payload["error"]["code"] == "rejected_input"
    assert payload["error"]["details"] == {"type": "RejectedInputError"}
    assert "'x'" in payload["error"]["message"]


def test_validation_error_envelope():
    class Params(BaseModel):
        sign: SignParam
        letter: LetterId

    with pytest.raises(ValidationError) as info:
        Params(sign=0, letter="a b")
    payload = format_validation_error(info.value, construction="klein_order")
    assert payload["error"]["code"] == "invalid_parameters"
    assert payload["error"]["details"]["construction"] == "klein_order"
    assert {problem["field"] for problem in payload["error"]["details"]["problems"]} == {"sign", "letter"}
