"""Tests for one-counter automata and their operations."""

import pytest

from cone_automata.automata import Alphabet, CounterBuilder, OneCounterAutomaton, ZeroFlag, closure, oc_accepts
from cone_automata.automata import onecounter as oc
from cone_automata.cones.samples import lquot_counter, surplus_counter
from cone_automata.errors import ConstructionError

AB = Alphabet.paired("a", "b")


def _all_words(letters, max_len):
    found = [()]
    layer = [()]
    for _ in range(max_len):
        layer = [word + (letter,) for word in layer for letter in letters]
        found.extend(layer)
    return found


def _l_quot_words(max_len):
    words = set()
    for m in range(max_len // 2 + 1):
        for k in range(max_len - 2 * m + 1):
            for run in (("b",) * k, ("b'",) * k):
                words.add(("a'",) * m + run + ("a",) * m)
    return words


# --- the positive-balance language ---


def test_surplus_counter_counts_strict_surplus():
    machine = surplus_counter()
    assert machine.accepts(("t",))
    assert machine.accepts(("t'", "t", "t"))
    assert not machine.accepts(())
    assert not machine.accepts(("t", "t'"))
    assert not oc_accepts(machine, ("t'", "t'", "t", "t"))


def test_surplus_counter_matches_definition_on_short_words():
    expected = {word for word in _all_words(("t", "t'"), 6) if word.count("t") > word.count("t'")}
    assert surplus_counter().accepted_words(6) == expected


def test_formal_inverse_of_surplus_counter_counts_the_other_letter():
    inverted = oc.formal_inverse(surplus_counter())
    expected = {word for word in _all_words(("t", "t'"), 5) if word.count("t'") > word.count("t")}
    assert inverted.accepted_words(5) == expected


# --- the conjugate language ---


def test_l_quot_matches_definition():
    assert lquot_counter().accepted_words(5) == _l_quot_words(5)


def test_l_quot_needs_matching_a_powers():
    machine = lquot_counter()
    assert machine.accepts(("a'", "b", "a"))
    assert machine.accepts(())
    assert not machine.accepts(("a'", "b"))
    assert not machine.accepts(("a", "b", "a'"))


def test_l_quot_is_closed_under_formal_inverse():
    assert oc.formal_inverse(lquot_counter()).accepted_words(5) == _l_quot_words(5)


def test_intersect_regular_keeps_positive_runs():
    shape = closure.concat(
        closure.letters_star(AB, ["a'"]),
        closure.letter_plus(AB, "b"),
        closure.letters_star(AB, ["a"]),
    )
    product = oc.intersect_regular(lquot_counter(), shape)
    expected = {word for word in _l_quot_words(5) if "b" in word}
    assert product.accepted_words(5) == expected


def test_prefix_union_and_conversion():
    prefixed = oc.prefix_with(closure.letter_plus(AB, "a"), lquot_counter())
    assert prefixed.accepts(("a",))
    assert prefixed.accepts(("a", "a'", "b", "a"))
    assert not prefixed.accepts(())

    both = oc.union(prefixed, closure.letter_plus(AB, "b"))
    assert both.accepts(("b", "b"))
    assert both.accepts(("a", "a"))

    ray = closure.letter_plus(AB, "b")
    assert oc.from_nfa(ray).accepted_words(3) == ray.accepted_words(3)


# --- construction errors ---


def test_union_needs_a_shared_initial_counter():
    builder = CounterBuilder(AB)
    lifted = builder.build(builder.add_state(accepting=True), initial_counter=1)
    with pytest.raises(ConstructionError):
        oc.union(lifted, lquot_counter())


def test_zero_tested_decrement_is_invalid():
    with pytest.raises(ConstructionError):
        OneCounterAutomaton(AB, 1, 0, frozenset({0}), ((0, "a", ZeroFlag.ZERO, 0, -1),))


def test_delta_is_bounded():
    with pytest.raises(ConstructionError):
        OneCounterAutomaton(AB, 1, 0, frozenset({0}), ((0, "a", ZeroFlag.POSITIVE, 0, 3),))
