"""Formal-language substrate: ε-NFAs, one-counter automata and rational transducers."""

from cone_automata.automata.letters import Alphabet, Letter, Word
from cone_automata.automata.nfa import Nfa, NfaBuilder, SignPartition, nfa_accepted_words, nfa_accepts
from cone_automata.automata.onecounter import (
    CounterBuilder,
    OneCounterAutomaton,
    ZeroFlag,
    oc_accepted_words,
    oc_accepts,
)
from cone_automata.automata.transducer import (
    Transducer,
    TransducerBuilder,
    identity_transducer,
    transducer_inverse_image,
    transducer_inverse_image_oc,
    transducer_outputs,
)

__all__ = [
    "Alphabet",
    "CounterBuilder",
    "Letter",
    "Nfa",
    "NfaBuilder",
    "OneCounterAutomaton",
    "SignPartition",
    "Transducer",
    "TransducerBuilder",
    "Word",
    "ZeroFlag",
    "identity_transducer",
    "nfa_accepted_words",
    "nfa_accepts",
    "oc_accepted_words",
    "oc_accepts",
    "transducer_inverse_image",
    "transducer_inverse_image_oc",
    "transducer_outputs",
]
