"""Cones on wreath products ``N wr Q`` with ``Q`` ordered by a regular cone."""

from __future__ import annotations

from cone_automata.automata import closure
from cone_automata.automata.letters import Alphabet
from cone_automata.automata.nfa import Nfa, NfaBuilder
from cone_automata.cones.language import ConeLanguage, Provenance
from cone_automata.errors import AlphabetError
from cone_automata.groups.descriptors import GroupDescriptor, WreathZZ


def wreath_language(l_n: Nfa, l_q: Nfa) -> Nfa:
    """``Y* L_N M_Q (X* M_Q)* Y*  u  L_Q`` with ``M_Q`` the formal inverse of ``L_Q``.

    The first lamp written is the one at the largest position of ``Q``; every
    later lamp sits strictly below it.
    """
    if not l_n.alphabet.disjoint(l_q.alphabet):
        raise AlphabetError(
            f"lamp and base alphabets overlap: {list(l_n.alphabet.ids)} / {list(l_q.alphabet.ids)}"
        )
    x, y = l_n.alphabet, l_q.alphabet
    m_q = closure.formal_inverse(l_q)
    y_star = closure.letters_star(y, y.ids)
    x_star = closure.letters_star(x, x.ids)
    lamps = closure.concat(y_star, l_n, m_q, closure.kleene_star(closure.concat(x_star, m_q)), y_star)
    return closure.union(lamps, l_q)


def wreath_cone(l_n: Nfa, l_q: Nfa, *, group: GroupDescriptor | None = None) -> ConeLanguage:
    return ConeLanguage(
        closure.trim(wreath_language(l_n, l_q)),
        group if group is not None else WreathZZ(),
        Provenance(construction="wreath_cone"),
    )


def wreath_cone_zz() -> ConeLanguage:
    """``wreath_cone`` for ``Z wr Z`` with both factors ordered by their generator."""
    cone = wreath_cone(
        closure.letter_plus(Alphabet.paired("c"), "c"),
        closure.letter_plus(Alphabet.paired("t"), "t"),
    )
    return ConeLanguage(cone.machine, cone.group, Provenance(construction="wreath_cone_zz"))


def zwrz_machine() -> Nfa:
    """The hand-built eight-state machine for ``Z wr Z``.

    Reads ``t^n c^m (t^-k c^+-j)* t^s`` with ``m > 0`` and every ``k > 0``;
    the first lamp has the largest position, so its sign is the leading
    coefficient. ``t^s`` with ``s > 0`` alone is accepted too.
    """
    alphabet = Alphabet.paired("c", "t")
    builder = NfaBuilder(alphabet)
    start = builder.add_state()
    shift_up = builder.add_state(accepting=True)
    shift_down = builder.add_state()
    lead = builder.add_state(accepting=True)
    left = builder.add_state(accepting=True)
    lamp_up = builder.add_state(accepting=True)
    lamp_down = builder.add_state(accepting=True)
    tail = builder.add_state(accepting=True)
    builder.add_edge(start, "t", shift_up)
    builder.add_edge(shift_up, "t", shift_up)
    builder.add_edge(start, "t'", shift_down)
    builder.add_edge(shift_down, "t'", shift_down)
    for state in (start, shift_up, shift_down):
        builder.add_edge(state, "c", lead)
    builder.add_edge(lead, "c", lead)
    for state in (lead, left, lamp_up, lamp_down):
        builder.add_edge(state, "t'", left)
        builder.add_edge(state, "t", tail)
    builder.add_edge(left, "c", lamp_up)
    builder.add_edge(lamp_up, "c", lamp_up)
    builder.add_edge(left, "c'", lamp_down)
    builder.add_edge(lamp_down, "c'", lamp_down)
    builder.add_edge(tail, "t", tail)
    return builder.build(start)


def zwrz_cone() -> ConeLanguage:
    return ConeLanguage(zwrz_machine(), WreathZZ(), Provenance(construction="zwrz_cone"))
