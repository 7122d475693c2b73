"""Tests for the construction registry and the command-line interface."""

import json

import pytest
from pydantic import ValidationError

from cone_automata import __version__
from cone_automata.cli import EXIT_CONSTRUCTION, EXIT_USAGE, UsageError, parse_params, run
from cone_automata.cones import ConeLanguage
from cone_automata.errors import ConstructionError, UnknownConstructionError
from cone_automata.groups import CyclicZ, ball
from cone_automata.registry import REGISTRY, Construction, NoParams, build, construction_names, get_construction


def _ok(capsys):
    payload = json.loads(capsys.readouterr().out)
    assert payload["ok"] is True
    return payload["data"]


def _error(capsys):
    payload = json.loads(capsys.readouterr().err)
    assert payload["ok"] is False
    return payload["error"]


# --- registry ---


@pytest.mark.parametrize("name", construction_names())
def test_every_construction_builds(name):
    artifact = build(name)
    assert artifact is not None
    if REGISTRY[name].is_cone:
        assert isinstance(artifact, ConeLanguage)
        assert artifact.name == name


def test_unknown_construction():
    with pytest.raises(UnknownConstructionError):
        get_construction("nope")


def test_parameters_are_validated():
    assert build("bs_affine_cone", {"q": "3"}).provenance.params == {"q": 3}
    with pytest.raises(ValidationError):
        build("bs_affine_cone", {"q": 1})
    with pytest.raises(ValidationError):
        build("klein_order", {"sign_a": 0})
    with pytest.raises(ValidationError):
        build("zz_cyclic", {"q": 2})


def test_lex_defaults_use_negative_q():
    cone = build("bs_lex_onecounter")
    assert cone.provenance.params == {"q": -2, "variant": 1}


def test_describe():
    entry = get_construction("bs_lex_onecounter").describe()
    assert entry["kind"] == "cone"
    assert set(entry["params"]) == {"q", "variant"}
    assert get_construction("tau_f2_transducer").describe()["kind"] == "machine"


def test_audit_config_merges_budgets():
    cfg = get_construction("zz_cyclic").audit_config(ball_radius=3, max_word_len=None)
    assert cfg.ball_radius == 3
    assert cfg.max_word_len == 8


def test_registry_verify_adds_oracle_agreement():
    entry = get_construction("zz_cyclic")
    report = entry.verify(cfg=entry.audit_config(ball_radius=3, max_word_len=5))
    assert report.property_results["oracle_agreement"].passed
    assert report.exit_code == 0


def test_sample_machines_cannot_be_verified():
    with pytest.raises(ConstructionError):
        get_construction("surplus_counter").verify()


# --- parameter parsing ---


def test_parse_params():
    assert parse_params(["--q", "3", "--variant=2", "--sign-b", "-1"]) == {"q": "3", "variant": "2", "sign_b": "-1"}
    with pytest.raises(UsageError):
        parse_params(["--q"])
    with pytest.raises(UsageError):
        parse_params(["stray"])


# --- build ---


# golden stem -> build arguments
MACHINE_GOLDENS = {
    "drawdown_automaton": ["drawdown_automaton"],
    "surplus_counter": ["surplus_counter"],
    "lquot_counter": ["lquot_counter"],
    "pm_z_automaton": ["pm_z_automaton"],
    "tau_f2_transducer": ["tau_f2_transducer"],
    "bs_affine_cone_q2": ["bs_affine_cone", "--q", "2"],
    "bs_lex_onecounter_q2_v1": ["bs_lex_onecounter", "--q", "2", "--variant", "1"],
    "zwrz_cone": ["zwrz_cone"],
    "embed_cross_z_f2": ["embed_cross_z_f2"],
}


@pytest.mark.parametrize("stem", sorted(MACHINE_GOLDENS))
def test_build_json_matches_golden(stem, capsys, golden):
    assert run(["build", *MACHINE_GOLDENS[stem]]) == 0
    golden(f"{stem}.json", capsys.readouterr().out)


@pytest.mark.parametrize("stem", sorted(MACHINE_GOLDENS))
def test_build_dot_matches_golden(stem, capsys, golden):
    assert run(["build", *MACHINE_GOLDENS[stem], "--emit", "dot"]) == 0
    golden(f"{stem}.dot", capsys.readouterr().out)


def test_affine_cone_dot(capsys, golden):
    assert run(["build", "bs_affine_cone", "--q", "2", "--emit", "dot"]) == 0
    out = capsys.readouterr().out
    golden("bs_affine_cone_q2.dot", out)
    assert out.startswith("digraph bs_affine_cone {\n")
    assert out.count("doublecircle") == 3


def test_build_is_deterministic(capsys):
    run(["build", "bs_lex_onecounter", "--q", "2", "--variant", "3"])
    first = capsys.readouterr().out
    run(["build", "bs_lex_onecounter", "--q", "2", "--variant", "3"])
    assert capsys.readouterr().out == first


# --- accepts ---


def test_accepts_cone(capsys):
    assert run(["accepts", "bs_affine_cone", "a' b a"]) == 0
    assert _ok(capsys) == {"construction": "bs_affine_cone", "word": "a' b a", "accepted": True}
    assert run(["accepts", "bs_affine_cone", "b'", "--q", "3"]) == 0
    assert _ok(capsys)["accepted"] is False


def test_accepts_empty_word(capsys):
    assert run(["accepts", "drawdown_automaton", "ε"]) == 0
    data = _ok(capsys)
    assert data["word"] == "ε"
    assert data["accepted"] is True


def test_accepts_transducer_lists_outputs(capsys):
    assert run(["accepts", "tau_f2_transducer", "a b"]) == 0
    data = _ok(capsys)
    assert data["accepted"] is True
    assert data["outputs"] == ["t t t"]


# --- verify ---


def test_verify_small_cyclic_ball(capsys):
    assert run(["verify", "zz_cyclic", "--radius", "3", "--max-word-len", "5"]) == 0
    data = _ok(capsys)
    assert data["construction"] == "zz_cyclic"
    assert data["config"]["ball_radius"] == 3
    assert data["violations"] == []
    assert data["property_results"]["oracle_agreement"]["passed"] is True


def test_verify_rejects_machines(capsys):
    assert run(["verify", "drawdown_automaton"]) == EXIT_USAGE
    assert _error(capsys)["code"] == "not_a_cone"


def test_verify_rejects_bad_budgets(capsys):
    assert run(["verify", "zz_cyclic", "--radius", "30"]) == EXIT_USAGE
    assert _error(capsys)["code"] == "invalid_parameters"


# --- tau ---


def test_tau_f2(capsys):
    assert run(["tau", "a b"]) == 0
    data = _ok(capsys)
    assert data["setup"] == "f2"
    assert data["tau"] == 3
    assert data["transducer_outputs"] == ["t t t"]


def test_tau_amalgam(capsys):
    assert run(["tau", "c b", "--setup", "bs_amalgam"]) == 0
    assert _ok(capsys)["tau"] == 1
    assert run(["tau", "b c", "--setup", "bs_amalgam", "--m", "3"]) == 0
    assert _ok(capsys)["tau"] == 3


def test_tau_rejects_parameters_for_fixed_setups(capsys):
    assert run(["tau", "a", "--q", "2"]) == EXIT_USAGE
    assert _error(capsys)["code"] == "invalid_parameters"


# --- list and errors ---


def test_list(capsys):
    assert run(["list"]) == 0
    names = [entry["name"] for entry in _ok(capsys)]
    assert names == list(construction_names())


@pytest.mark.parametrize(
    ("argv", "code"),
    [
        ([], "usage"),
        (["list", "--q", "2"], "usage"),
        (["accepts", "zz_cyclic", "t", "extra"], "usage"),
        (["build", "nope"], "unknown_construction"),
        (["accepts", "zz_cyclic", "x"], "rejected_input"),
        (["build", "bs_affine_cone", "--q", "1"], "invalid_parameters"),
    ],
)
def test_usage_errors(argv, code, capsys):
    assert run(argv) == EXIT_USAGE
    assert _error(capsys)["code"] == code


def test_construction_failures_exit_70(monkeypatch, capsys):
    def explode(_):
        raise ConstructionError("boom")

    monkeypatch.setitem(REGISTRY, "broken", Construction("broken", "always fails", NoParams, explode))
    assert run(["build", "broken"]) == EXIT_CONSTRUCTION
    error = _error(capsys)
    assert error["code"] == "construction_failed"
    assert error["message"] == "boom"


def test_negative_ball_radius_is_a_usage_error(monkeypatch, capsys):
    def negative_ball(_):
        ball(CyclicZ(), -1)

    entry = Construction("negative", "asks for a negative ball", NoParams, negative_ball)
    monkeypatch.setitem(REGISTRY, "negative", entry)
    assert run(["build", "negative"]) == EXIT_USAGE
    assert _error(capsys)["code"] == "invalid_parameters"
    assert run(["verify", "zz_cyclic", "--radius", "-1"]) == EXIT_USAGE
    assert _error(capsys)["code"] == "invalid_parameters"


def test_version(capsys):
    assert run(["--version"]) == 0
    assert __version__ in capsys.readouterr().out
