"""Graphviz DOT export with the conventions of hand-drawn automata.

Accepting states are double circles, sign-partitioned states carry a
superscript + or -, edge labels read ``x``, ``x,+k`` or ``x/u``.
"""

from __future__ import annotations

import graphviz

from cone_automata.automata.nfa import Nfa
from cone_automata.automata.onecounter import OneCounterAutomaton, ZeroFlag
from cone_automata.automata.serialization import Machine
from cone_automata.formatting import format_word
from cone_automata.utils import EPSILON_TEXT


def _state_label(machine: Machine, state: int) -> str:
    if isinstance(machine, Nfa) and machine.sign is not None:
        if state in machine.sign.plus:
            return f"<{state}<SUP>+</SUP>>"
        if state in machine.sign.minus:
            return f"<{state}<SUP>-</SUP>>"
    return str(state)


def _counter_edges(machine: OneCounterAutomaton) -> list[tuple[int, int, str]]:
    flags: dict[tuple[int, str | None, int, int], set[ZeroFlag]] = {}
    for src, letter, flag, dst, delta in machine.edges:
        flags.setdefault((src, letter, dst, delta), set()).add(flag)
    rows = []
    for (src, letter, dst, delta), seen in flags.items():
        label = f"{letter or EPSILON_TEXT},{delta:+d}"
        if seen == {ZeroFlag.ZERO}:
            label += " [=0]"
        elif seen == {ZeroFlag.POSITIVE}:
            label += " [>0]"
        rows.append((src, dst, label))
    return rows


def to_dot(machine: Machine, name: str = "machine") -> str:
    graph = graphviz.Digraph(name=name, graph_attr={"rankdir": "LR"}, node_attr={"shape": "circle"})
    graph.node("start", label="", shape="none", width="0")
    for state in machine.states:
        shape = "doublecircle" if state in machine.accepting else "circle"
        graph.node(str(state), label=_state_label(machine, state), shape=shape)
    graph.edge("start", str(machine.initial))
    if isinstance(machine, Nfa):
        for src, letter, dst in machine.edges:
            graph.edge(str(src), str(dst), label=letter or EPSILON_TEXT)
    elif isinstance(machine, OneCounterAutomaton):
        for src, dst, label in _counter_edges(machine):
            graph.edge(str(src), str(dst), label=label)
    else:
        for src, letter, dst, output in machine.edges:
            graph.edge(str(src), str(dst), label=f"{letter or EPSILON_TEXT}/{format_word(output)}")
    return graph.source
