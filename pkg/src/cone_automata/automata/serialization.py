"""Canonical JSON form of machines.

Field order is fixed by the document models below; transitions are emitted in
the machines' canonical edge order, so identical machines serialize to
identical bytes.
"""

from __future__ import annotations

import json
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from cone_automata.automata.letters import Alphabet, Letter
from cone_automata.automata.nfa import Nfa, SignPartition
from cone_automata.automata.onecounter import OneCounterAutomaton, ZeroFlag
from cone_automata.automata.transducer import Transducer
from cone_automata.errors import ConstructionError

Machine = Nfa | OneCounterAutomaton | Transducer
MachineKind = Literal["nfa", "onecounter", "transducer"]

_OPTIONAL_KEYS = ("output_alphabet", "sign", "initial_counter")


class LetterDocument(BaseModel):
    id: str
    inverse_of: str | None = None


class SignDocument(BaseModel):
    plus: list[int]
    minus: list[int]


class TransitionDocument(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    source: int = Field(alias="from")
    letter: str | None
    to: int


class CounterTransitionDocument(TransitionDocument):
    delta: int
    zero_flag: ZeroFlag


class TransducerTransitionDocument(TransitionDocument):
    output: list[str]


class MachineDocument(BaseModel):
    kind: MachineKind
    alphabet: list[LetterDocument]
    output_alphabet: list[LetterDocument] | None = None
    states: int = Field(ge=1)
    initial: int
    accepting: list[int]
    sign: SignDocument | None = None
    initial_counter: int | None = Field(default=None, ge=0)
    transitions: list[dict[str, Any]]


def _letters(alphabet: Alphabet) -> list[LetterDocument]:
    return [LetterDocument(id=letter.id, inverse_of=letter.inverse_of) for letter in alphabet.letters]


def machine_kind(machine: Machine) -> MachineKind:
    if isinstance(machine, Nfa):
        return "nfa"
    if isinstance(machine, OneCounterAutomaton):
        return "onecounter"
    return "transducer"


def to_document(machine: Machine) -> MachineDocument:
    transitions: list[TransitionDocument]
    output_alphabet = None
    sign = None
    initial_counter = None
    if isinstance(machine, Nfa):
        transitions = [TransitionDocument(source=s, letter=x, to=d) for s, x, d in machine.edges]
        if machine.sign is not None:
            sign = SignDocument(plus=sorted(machine.sign.plus), minus=sorted(machine.sign.minus))
        alphabet = machine.alphabet
    elif isinstance(machine, OneCounterAutomaton):
        transitions = [
            CounterTransitionDocument(source=s, letter=x, to=d, delta=k, zero_flag=f) for s, x, f, d, k in machine.edges
        ]
        initial_counter = machine.initial_counter
        alphabet = machine.alphabet
    else:
        transitions = [
            TransducerTransitionDocument(source=s, letter=x, to=d, output=list(out)) for s, x, d, out in machine.edges
        ]
        output_alphabet = _letters(machine.output_alphabet)
        alphabet = machine.input_alphabet
    return MachineDocument(
        kind=machine_kind(machine),
        alphabet=_letters(alphabet),
        output_alphabet=output_alphabet,
        states=machine.num_states,
        initial=machine.initial,
        accepting=sorted(machine.accepting),
        sign=sign,
        initial_counter=initial_counter,
        transitions=[t.model_dump(mode="json", by_alias=True) for t in transitions],
    )


def machine_to_dict(machine: Machine) -> dict[str, Any]:
    data = to_document(machine).model_dump(mode="json")
    for key in _OPTIONAL_KEYS:
        if data[key] is None:
            del data[key]
    for key in ("alphabet", "output_alphabet"):
        for letter in data.get(key) or ():
            if letter["inverse_of"] is None:
                del letter["inverse_of"]
    return data


def machine_to_json(machine: Machine) -> str:
    """UTF-8 JSON text, newline-terminated."""
    return json.dumps(machine_to_dict(machine), ensure_ascii=False) + "\n"


def _alphabet(letters: list[LetterDocument]) -> Alphabet:
    return Alphabet(tuple(Letter(letter.id, letter.inverse_of) for letter in letters))


def machine_from_json(text: str) -> Machine:
    """Parse a machine document; raises ``ConstructionError`` on malformed input."""
    try:
        doc = MachineDocument.model_validate_json(text)
        alphabet = _alphabet(doc.alphabet)
        if doc.kind == "nfa":
            rows = [TransitionDocument.model_validate(t) for t in doc.transitions]
            sign = None
            if doc.sign is not None:
                sign = SignPartition(frozenset(doc.sign.plus), frozenset(doc.sign.minus))
            return Nfa(
                alphabet, doc.states, doc.initial, frozenset(doc.accepting), tuple((t.source, t.letter, t.to) for t in rows), sign
            )
        if doc.kind == "onecounter":
            counter_rows = [CounterTransitionDocument.model_validate(t) for t in doc.transitions]
            return OneCounterAutomaton(
                alphabet,
                doc.states,
                doc.initial,
                frozenset(doc.accepting),
                tuple((t.source, t.letter, t.zero_flag, t.to, t.delta) for t in counter_rows),
                doc.initial_counter or 0,
            )
        if doc.output_alphabet is None:
            raise ConstructionError("transducer document lacks output_alphabet")
        transducer_rows = [TransducerTransitionDocument.model_validate(t) for t in doc.transitions]
        return Transducer(
            alphabet,
            _alphabet(doc.output_alphabet),
            doc.states,
            doc.initial,
            frozenset(doc.accepting),
            tuple((t.source, t.letter, t.to, tuple(t.output)) for t in transducer_rows),
        )
    except ValidationError as exc:
        raise ConstructionError(f"malformed machine document: {exc.error_count()} problem(s)") from exc
