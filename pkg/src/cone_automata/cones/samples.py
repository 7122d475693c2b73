"""The worked machines, reproducible by name."""

from __future__ import annotations

from cone_automata.automata import closure
from cone_automata.automata.letters import Alphabet
from cone_automata.automata.nfa import Nfa, NfaBuilder
from cone_automata.automata.onecounter import OneCounterAutomaton
from cone_automata.automata.transducer import Transducer
from cone_automata.cones.baumslag_solitar import l_quot
from cone_automata.cones.quasimorphism import f2_tau_setup, pm_automaton, positive_balance_counter


def drawdown_automaton() -> Nfa:
    """Words over ``{t, t^-1}`` whose factors never drop the balance below ``-2``.

    The state counts how far the balance sits below its running maximum.
    """
    alphabet = Alphabet.paired("t")
    builder = NfaBuilder(alphabet)
    level = [builder.add_state(accepting=True) for _ in range(3)]
    builder.add_edge(level[0], "t", level[0])
    for upper, lower in zip(level, level[1:]):
        builder.add_edge(upper, "t'", lower)
        builder.add_edge(lower, "t", upper)
    return builder.build(level[0])


def surplus_counter() -> OneCounterAutomaton:
    return positive_balance_counter()


def lquot_counter() -> OneCounterAutomaton:
    return l_quot()


def pm_z_automaton() -> Nfa:
    """Plus/minus automaton of ``{t}+`` on ``Z``."""
    return pm_automaton(closure.letter_plus(Alphabet.paired("t"), "t"))


def tau_f2_transducer() -> Transducer:
    return f2_tau_setup().transducer()
