"""Lexicographic cones of extensions, led by the quotient."""

from __future__ import annotations

import logging
from typing import Any

from cone_automata.automata import closure
from cone_automata.automata import onecounter as oc
from cone_automata.automata.letters import Alphabet
from cone_automata.automata.nfa import Nfa
from cone_automata.automata.onecounter import OneCounterAutomaton
from cone_automata.cones.language import TRIVIAL, ConeLanguage, Provenance, RelativeSubgroup
from cone_automata.errors import AlphabetError
from cone_automata.groups.descriptors import GroupDescriptor, KleinBottle

logger = logging.getLogger("cone-automata.cones")


def _union(*machines: Nfa | OneCounterAutomaton) -> Nfa | OneCounterAutomaton:
    if all(isinstance(m, Nfa) for m in machines):
        return closure.union(*machines)  # type: ignore[arg-type]
    return oc.union(*machines)


def cone_union_relative(rel: ConeLanguage, sub: ConeLanguage) -> ConeLanguage:
    """Extend a cone relative to ``H`` by a cone of ``H`` to an absolute cone."""
    if not sub.alphabet.issubset(rel.alphabet):
        raise AlphabetError(
            f"subgroup cone alphabet {list(sub.alphabet.ids)} is not inside {list(rel.alphabet.ids)}"
        )
    return ConeLanguage(
        machine=_union(rel.machine, sub.machine),
        group=rel.group,
        provenance=Provenance(
            construction="cone_union_relative",
            params={"rel": rel.provenance.construction, "sub": sub.provenance.construction},
        ),
    )


def lex_quotient_cone(
    l_n: Nfa | OneCounterAutomaton,
    l_q: Nfa,
    *,
    group: GroupDescriptor,
    relative_to: RelativeSubgroup = TRIVIAL,
    name: str = "lex_quotient_cone",
    params: dict[str, Any] | None = None,
) -> ConeLanguage:
    """``f^-1(P_Q) u P_N`` for ``N -> G -> Q`` with ``N`` on ``X`` and ``Q`` on ``Y``.

    The quotient part is the preimage of ``L_Q`` under the homomorphism that
    erases ``X``; it stays regular, so the result is one-counter only when
    ``L_N`` is.
    """
    if not l_n.alphabet.disjoint(l_q.alphabet):
        raise AlphabetError(
            f"kernel and quotient alphabets overlap: {list(l_n.alphabet.ids)} / {list(l_q.alphabet.ids)}"
        )
    full = l_n.alphabet.union(l_q.alphabet)
    pulled = closure.inverse_hom(l_q, closure.deletion_map(full, l_n.alphabet.ids), full)
    machine = _union(l_n, pulled)
    logger.debug("lex cone %s: %d states", name, machine.num_states)
    return ConeLanguage(machine, group, Provenance(construction=name, params=params or {}), relative_to)


def generator_ray(alphabet: Alphabet, generator: str, sign: int = 1) -> Nfa:
    """``{x}+`` or ``{x^-1}+`` inside ``alphabet``."""
    letter = generator if sign > 0 else alphabet.inverse(generator)
    return closure.letter_plus(alphabet, letter)


def klein_order(sign_b: int, sign_a: int) -> ConeLanguage:
    """One of the four cones of the Klein bottle group ``<b> -> K -> <a>``."""
    kernel = generator_ray(Alphabet.paired("b"), "b", sign_b)
    quotient = generator_ray(Alphabet.paired("a"), "a", sign_a)
    return lex_quotient_cone(
        kernel,
        quotient,
        group=KleinBottle(),
        name="klein_order",
        params={"sign_b": sign_b, "sign_a": sign_a},
    )


def klein_orders() -> list[ConeLanguage]:
    """All four orders, ordered ``(+,+), (+,-), (-,+), (-,-)`` as ``(sign_b, sign_a)``."""
    return [klein_order(sign_b, sign_a) for sign_b in (1, -1) for sign_a in (1, -1)]
