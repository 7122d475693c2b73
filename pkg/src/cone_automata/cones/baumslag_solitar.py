"""Cones on ``BS(1, q) = <a, b | a b a^-1 = b^q>``.

Two families: the affine cone (``g(0) > 0`` under ``a: x -> qx``,
``b: x -> x + 1``, extended by ``<a>+``) and the four lexicographic cones led
by the quotient ``n``, which need a counter to match ``a^-m ... a^m``.
"""

from __future__ import annotations

from cone_automata.automata import closure
from cone_automata.automata import onecounter as oc
from cone_automata.automata.letters import Alphabet
from cone_automata.automata.nfa import Nfa, NfaBuilder
from cone_automata.automata.onecounter import CounterBuilder, OneCounterAutomaton, ZeroFlag
from cone_automata.cones.language import ConeLanguage, Provenance, RelativeSubgroup
from cone_automata.errors import ConstructionError
from cone_automata.groups.descriptors import BS1q

A_SUBGROUP = RelativeSubgroup(generators=("a",), description="<a>")


def affine_cone_machine(*, include_a_ray: bool = True, fiber: str = "b") -> Nfa:
    """``a^n a^-m b^k a^m`` with ``k >= 1``, ``m >= 0`` as five states.

    ``s0`` branches into an ``a``-run (``s1``, accepting only when the ``<a>+``
    ray is included) and an ``a^-1``-run (``s2``); any of the three reads a
    ``fiber``-run (``s3``) followed by an ``a``-run (``s4``).
    """
    alphabet = Alphabet.paired("a", fiber)
    builder = NfaBuilder(alphabet)
    s0 = builder.add_state()
    s1 = builder.add_state(accepting=include_a_ray)
    s2 = builder.add_state()
    s3 = builder.add_state(accepting=True)
    s4 = builder.add_state(accepting=True)
    builder.add_edge(s0, "a", s1)
    builder.add_edge(s1, "a", s1)
    builder.add_edge(s0, "a'", s2)
    builder.add_edge(s2, "a'", s2)
    for state in (s0, s1, s2):
        builder.add_edge(state, fiber, s3)
    builder.add_edge(s3, fiber, s3)
    builder.add_edge(s3, "a", s4)
    builder.add_edge(s4, "a", s4)
    return builder.build(s0)


def _check_affine_q(q: int) -> None:
    if q < 2:
        raise ConstructionError(f"the affine cone needs q >= 2, got {q}")


def bs_affine_cone(q: int) -> ConeLanguage:
    """``{g : g(0) > 0} u <a>+``; the letters do not depend on ``q``."""
    _check_affine_q(q)
    return ConeLanguage(
        affine_cone_machine(),
        BS1q(q=q),
        Provenance(construction="bs_affine_cone", params={"q": q}),
    )


def bs_affine_relative_cone(q: int) -> ConeLanguage:
    """``P0 = {g : g(0) > 0}``, a cone relative to ``<a>``."""
    _check_affine_q(q)
    return ConeLanguage(
        affine_cone_machine(include_a_ray=False),
        BS1q(q=q),
        Provenance(construction="bs_affine_relative_cone", params={"q": q}),
        A_SUBGROUP,
    )


def l_quot() -> OneCounterAutomaton:
    """``{a^-m b^k a^m : m >= 0, k in Z}``: push on ``a^-1``, pop on ``a``."""
    alphabet = Alphabet.paired("a", "b")
    builder = CounterBuilder(alphabet)
    push = builder.add_state()
    up = builder.add_state()
    down = builder.add_state()
    pop = builder.add_state()
    done = builder.add_state(accepting=True)
    builder.add_edge(push, "a'", push, delta=1)
    builder.add_edge(push, None, pop)
    builder.add_edge(push, "b", up)
    builder.add_edge(up, "b", up)
    builder.add_edge(up, None, pop)
    builder.add_edge(push, "b'", down)
    builder.add_edge(down, "b'", down)
    builder.add_edge(down, None, pop)
    builder.add_edge(pop, "a", pop, delta=-1, flag=ZeroFlag.POSITIVE)
    builder.add_edge(pop, None, done, flag=ZeroFlag.ZERO)
    return builder.build(push)


def _kernel_part(q: int) -> OneCounterAutomaton:
    """Words of ``L_quot`` evaluating to a positive fiber element.

    For ``q > 0`` these are exactly the ``b``-runs; for ``q < 0`` the sign of
    ``q^-m`` flips with the parity of ``m``, so odd conjugates use ``b^-1``.
    """
    alphabet = Alphabet.paired("a", "b")
    quotient = l_quot()
    if q > 0:
        shape = closure.concat(
            closure.letters_star(alphabet, ["a'"]),
            closure.letter_plus(alphabet, "b"),
            closure.letters_star(alphabet, ["a"]),
        )
        return oc.intersect_regular(quotient, shape)
    even = closure.concat(
        closure.word_star(alphabet, ("a'", "a'")),
        closure.letter_plus(alphabet, "b"),
        closure.word_star(alphabet, ("a", "a")),
    )
    odd = closure.concat(
        closure.word_language(alphabet, [("a'",)]),
        closure.word_star(alphabet, ("a'", "a'")),
        closure.letter_plus(alphabet, "b'"),
        closure.word_star(alphabet, ("a", "a")),
        closure.word_language(alphabet, [("a",)]),
    )
    return oc.union(oc.intersect_regular(quotient, even), oc.intersect_regular(quotient, odd))


def bs_lex_onecounter(q: int, variant: int) -> ConeLanguage:
    """The lexicographic cone ``P_variant`` on ``BS(1, q)``.

    1: ``n > 0`` or (``n = 0`` and fiber ``> 0``); 2: ``n < 0`` or
    (``n = 0`` and fiber ``> 0``); 3 and 4 are the formal inverses of 1 and 2.
    """
    if q == 0:
        raise ConstructionError("q must be nonzero")
    if variant not in (1, 2, 3, 4):
        raise ConstructionError(f"variant must be 1..4, got {variant}")
    alphabet = Alphabet.paired("a", "b")
    kernel = _kernel_part(q)
    lead = "a" if variant in (1, 3) else "a'"
    machine = oc.union(oc.prefix_with(closure.letter_plus(alphabet, lead), l_quot()), kernel)
    if variant > 2:
        machine = oc.formal_inverse(machine)
    return ConeLanguage(
        machine,
        BS1q(q=q),
        Provenance(construction="bs_lex_onecounter", params={"q": q, "variant": variant}),
    )
