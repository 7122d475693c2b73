"""Tests for alphabets, words and ε-NFA simulation."""

import pytest

from cone_automata.automata import Alphabet, Letter, Nfa, NfaBuilder, nfa_accepted_words, nfa_accepts
from cone_automata.cones.samples import drawdown_automaton, pm_z_automaton
from cone_automata.errors import AlphabetError, ConstructionError, RejectedInputError, UnpairedLetterError

T = "t"
T_INV = "t'"


def _all_words(letters, max_len):
    words = [()]
    layer = [()]
    for _ in range(max_len):
        layer = [word + (letter,) for word in layer for letter in letters]
        words.extend(layer)
    return set(words)


# --- alphabets ---


def test_paired_alphabet_is_sorted_and_involutive():
    alphabet = Alphabet.paired("b", "a")
    assert alphabet.ids == ("a", "a'", "b", "b'")
    assert alphabet.inverse("a") == "a'"
    assert alphabet.inverse("b'") == "b"
    assert alphabet.inverse_word(("a", "b'")) == ("b", "a'")


def test_broken_pairing_is_rejected():
    with pytest.raises(AlphabetError):
        Alphabet((Letter("x", "y"), Letter("y", "z"), Letter("z")))


def test_union_with_conflicting_pairing_fails():
    with pytest.raises(AlphabetError):
        Alphabet.paired("x").union(Alphabet.plain("x"))


def test_unknown_letter_is_rejected_input_not_rejection():
    alphabet = Alphabet.paired("t")
    with pytest.raises(RejectedInputError) as info:
        alphabet.check_word(("t", "x"))
    assert info.value.letter == "x"


def test_plain_letters_have_no_inverse():
    with pytest.raises(UnpairedLetterError):
        Alphabet.plain("x").inverse("x")


# --- simulation ---


def test_drawdown_accepts_every_short_word():
    machine = drawdown_automaton()
    assert nfa_accepted_words(machine, 2) == _all_words((T, T_INV), 2)
    assert len(nfa_accepted_words(machine, 2)) == 7


def test_drawdown_rejects_a_drop_of_three():
    machine = drawdown_automaton()
    assert not nfa_accepts(machine, (T_INV, T_INV, T_INV))
    assert not machine.accepts((T, T, T_INV, T_INV, T_INV))
    assert machine.accepts((T_INV, T_INV, T, T_INV))
    assert len(machine.accepted_words(3)) == 14


def test_accepted_words_match_membership():
    machine = drawdown_automaton()
    accepted = machine.accepted_words(4)
    for word in _all_words((T, T_INV), 4):
        assert (word in accepted) == machine.accepts(word)


def test_letter_outside_alphabet_raises():
    with pytest.raises(RejectedInputError):
        drawdown_automaton().accepts(("x",))


def test_sign_of_plus_minus_machine():
    machine = pm_z_automaton()
    assert machine.sign_of((T, T)) == 1
    assert machine.sign_of((T_INV,)) == -1
    assert machine.sign_of(()) == 0
    assert machine.sign_of((T, T_INV)) == 0


def test_epsilon_moves_are_followed():
    builder = NfaBuilder(Alphabet.paired("t"))
    start = builder.add_state()
    middle = builder.add_state()
    end = builder.add_state(accepting=True)
    builder.add_edge(start, None, middle)
    builder.add_word_edge(middle, (T, T), end)
    machine = builder.build(start)
    assert machine.accepts((T, T))
    assert not machine.accepts((T,))
    assert machine.has_epsilon


def test_invalid_machines_are_rejected():
    alphabet = Alphabet.paired("t")
    with pytest.raises(ConstructionError):
        Nfa(alphabet, 1, 3, frozenset(), ())
    with pytest.raises(ConstructionError):
        Nfa(alphabet, 1, 0, frozenset(), ((0, "x", 0),))


def test_edges_are_canonical():
    alphabet = Alphabet.paired("t")
    left = Nfa(alphabet, 2, 0, frozenset({1}), ((0, T, 1), (0, None, 1), (0, T, 1)))
    right = Nfa(alphabet, 2, 0, frozenset({1}), ((0, None, 1), (0, T, 1)))
    assert left == right
    assert left.edges == ((0, None, 1), (0, T, 1))
