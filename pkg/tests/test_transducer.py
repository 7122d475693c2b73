"""Tests for rational transducers and inverse images."""

import pytest

from cone_automata.automata import (
    Alphabet,
    TransducerBuilder,
    closure,
    identity_transducer,
    transducer_inverse_image,
    transducer_inverse_image_oc,
    transducer_outputs,
)
from cone_automata.cones.embedding import output_value
from cone_automata.cones.quasimorphism import f2_tau_setup
from cone_automata.cones.samples import surplus_counter, tau_f2_transducer
from cone_automata.errors import AlphabetError, ConstructionError
from cone_automata.groups import build_group
from cone_automata.groups.free import free_reduce


def _reduced_words(alphabet, max_len):
    found = {()}
    layer = [()]
    for _ in range(max_len):
        layer = [
            word + (letter,)
            for word in layer
            for letter in alphabet.ids
            if not word or word[-1] != alphabet.inverse(letter)
        ]
        found.update(layer)
    return found


# --- the F2 quasi-morphism transducer ---


def test_tau_transducer_outputs_on_ab():
    t = tau_f2_transducer()
    outputs = transducer_outputs(t, ("a", "b"))
    assert outputs == {("t", "t", "t")}
    assert {output_value(output) for output in outputs} == {3}


def test_tau_transducer_empty_word_outputs_nothing():
    assert tau_f2_transducer().outputs(()) == {()}


def test_tau_transducer_outputs_evaluate_to_tau_on_reduced_words():
    setup = f2_tau_setup()
    t = setup.transducer()
    group = build_group(setup.group)
    words = _reduced_words(group.alphabet, 6)
    assert len(words) == 1457
    for word in words:
        outputs = t.outputs(word)
        assert outputs, word
        expected = setup.tau(group.evaluate(word))
        assert {output_value(output) for output in outputs} == {expected}, word


def test_tau_transducer_ab_inverse_evaluates_to_one():
    outputs = tau_f2_transducer().outputs(("a", "b'"))
    assert {output_value(output) for output in outputs} == {1}


# --- inverse images ---


def test_identity_transducer_pulls_back_the_language():
    alphabet = Alphabet.paired("t")
    language = closure.union(closure.letter_plus(alphabet, "t"), closure.word_language(alphabet, [("t'", "t")]))
    pulled = transducer_inverse_image(identity_transducer(alphabet), language)
    assert pulled.accepted_words(4) == language.accepted_words(4)


def test_inverse_image_with_word_outputs():
    source = Alphabet.plain("x")
    target = Alphabet.paired("t")
    builder = TransducerBuilder(source, target)
    state = builder.add_state(accepting=True)
    builder.add_edge(state, "x", state, ("t", "t"))
    t = builder.build(state)
    even = closure.word_star(target, ("t", "t"))
    assert transducer_inverse_image(t, even).accepted_words(3) == {(), ("x",), ("x", "x"), ("x", "x", "x")}
    single = closure.word_language(target, [("t", "t", "t", "t")])
    assert transducer_inverse_image(t, single).accepted_words(3) == {("x", "x")}


def test_onecounter_inverse_image_is_the_free_group_cone():
    cone = transducer_inverse_image_oc(tau_f2_transducer(), surplus_counter())
    assert cone.accepts(("a",))
    assert cone.accepts(("a", "b"))
    assert cone.accepts(("a'", "b"))
    assert not cone.accepts(("a'",))
    assert not cone.accepts(("b'", "a'"))
    assert not cone.accepts(("b", "a'"))
    assert not cone.accepts(())


def test_silent_transducer_pulls_back_nothing_from_the_surplus_counter():
    builder = TransducerBuilder(Alphabet.paired("a"), Alphabet.paired("t"))
    state = builder.add_state(accepting=True)
    builder.add_edge(state, "a", state)
    builder.add_edge(state, "a'", state)
    pulled = transducer_inverse_image_oc(builder.build(state), surplus_counter())
    assert pulled.accepted_words(4) == set()


def test_inverse_image_checks_the_output_alphabet():
    with pytest.raises(AlphabetError):
        transducer_inverse_image(tau_f2_transducer(), closure.letter_plus(Alphabet.paired("s"), "s"))


def test_transducer_validates_its_edges():
    builder = TransducerBuilder(Alphabet.plain("x"), Alphabet.paired("t"))
    state = builder.add_state(accepting=True)
    builder.add_edge(state, "y", state)
    with pytest.raises(ConstructionError):
        builder.build(state)


def test_free_reduce_cancels_adjacent_inverses():
    alphabet = Alphabet.paired("a", "b")
    assert free_reduce(alphabet, ("a", "b", "b'", "a'", "b")) == ("b",)
