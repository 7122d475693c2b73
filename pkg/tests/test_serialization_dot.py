"""Tests for canonical JSON and DOT export of the worked machines."""

import json

import pytest

from cone_automata.automata.dot import to_dot
from cone_automata.automata.serialization import machine_from_json, machine_to_dict, machine_to_json
from cone_automata.automata.transducer import Transducer
from cone_automata.cones import ConeLanguage
from cone_automata.cones.samples import (
    drawdown_automaton,
    lquot_counter,
    pm_z_automaton,
    surplus_counter,
    tau_f2_transducer,
)
from cone_automata.errors import ConstructionError
from cone_automata.registry import build, construction_names

SAMPLES = {
    "drawdown_automaton": drawdown_automaton,
    "surplus_counter": surplus_counter,
    "lquot_counter": lquot_counter,
    "pm_z_automaton": pm_z_automaton,
}


# --- golden JSON ---


@pytest.mark.parametrize("name", sorted(SAMPLES))
def test_sample_json_matches_golden(name, golden):
    golden(f"{name}.json", machine_to_json(SAMPLES[name]()))


@pytest.mark.parametrize("name", sorted(SAMPLES))
def test_json_is_deterministic(name):
    assert machine_to_json(SAMPLES[name]()) == machine_to_json(SAMPLES[name]())


def test_json_key_order():
    keys = list(machine_to_dict(pm_z_automaton()))
    assert keys == ["kind", "alphabet", "states", "initial", "accepting", "sign", "transitions"]
    keys = list(machine_to_dict(surplus_counter()))
    assert keys == ["kind", "alphabet", "states", "initial", "accepting", "initial_counter", "transitions"]


def test_transducer_document_carries_outputs():
    data = machine_to_dict(tau_f2_transducer())
    assert data["kind"] == "transducer"
    assert [letter["id"] for letter in data["output_alphabet"]] == ["t", "t'"]
    assert any(row["output"] == ["t", "t"] for row in data["transitions"])


# --- parsing back ---


def test_reload_preserves_nfa_and_sign():
    machine = pm_z_automaton()
    loaded = machine_from_json(machine_to_json(machine))
    assert machine_to_json(loaded) == machine_to_json(machine)
    assert loaded.sign == machine.sign


def test_reload_preserves_counter_machine():
    machine = surplus_counter()
    loaded = machine_from_json(machine_to_json(machine))
    assert loaded.accepts(("t", "t'", "t"))
    assert not loaded.accepts(("t", "t'"))


def test_reload_preserves_transducer():
    machine = tau_f2_transducer()
    loaded = machine_from_json(machine_to_json(machine))
    assert loaded.outputs(("a", "b")) == {("t", "t", "t")}


@pytest.mark.parametrize("name", construction_names())
def test_every_construction_round_trips(name):
    artifact = build(name)
    machine = artifact.machine if isinstance(artifact, ConeLanguage) else artifact
    text = machine_to_json(machine)
    loaded = machine_from_json(text)
    assert type(loaded) is type(machine)
    assert machine_to_json(loaded) == text
    if isinstance(machine, Transducer):
        word = machine.input_alphabet.ids[:2]
        assert loaded.outputs(word) == machine.outputs(word)
    else:
        assert loaded.accepted_words(4) == machine.accepted_words(4)


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        json.dumps({"kind": "nfa"}),
        json.dumps({"kind": "pda", "alphabet": [], "states": 1, "initial": 0, "accepting": [], "transitions": []}),
        json.dumps({"kind": "transducer", "alphabet": [], "states": 1, "initial": 0, "accepting": [], "transitions": []}),
    ],
)
def test_malformed_documents_raise(text):
    with pytest.raises(ConstructionError):
        machine_from_json(text)


def test_out_of_range_state_raises():
    doc = machine_to_dict(drawdown_automaton())
    doc["transitions"].append({"from": 0, "letter": "t", "to": 9})
    with pytest.raises(ConstructionError):
        machine_from_json(json.dumps(doc))


# --- DOT ---


def test_dot_marks_accepting_states():
    text = to_dot(drawdown_automaton(), name="drawdown_automaton")
    assert "digraph drawdown_automaton" in text
    assert text.count("doublecircle") == 3


def test_dot_shows_sign_superscripts():
    text = to_dot(pm_z_automaton())
    assert "<SUP>+</SUP>" in text
    assert "<SUP>-</SUP>" in text


def test_dot_counter_labels():
    assert "t,+1" in to_dot(surplus_counter())
    assert "a',+1" in to_dot(lquot_counter())
    assert "[=0]" in to_dot(lquot_counter())


def test_dot_transducer_labels():
    text = to_dot(tau_f2_transducer())
    assert "ε/t t" in text
    assert "a/ε" in text


def test_dot_is_deterministic():
    assert to_dot(lquot_counter()) == to_dot(lquot_counter())
